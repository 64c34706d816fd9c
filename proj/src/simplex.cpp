#include "gik/simplex.hpp"

#include <ostream>
#include <vector>

#include "gik/error.hpp"

namespace gik {

LpSolution simplex_maximize(const LpProblem& lp) {
  const Eigen::Index m = lp.constraints.rows();
  const Eigen::Index n = lp.constraints.cols();
  require(lp.rhs.size() == m && lp.objective.size() == n, Errc::dimension_mismatch,
          "inconsistent LP dimensions");
  for (Eigen::Index r = 0; r < m; ++r) {
    require(lp.rhs(r) >= 0, Errc::out_of_range, "simplex needs a non-negative right-hand side");
  }

  // Tableau: columns [structural | slack | rhs]; last row is the objective
  // (reduced costs of a max problem, stored negated so pivoting is uniform).
  MatrixR tab = MatrixR::Zero(m + 1, n + m + 1);
  tab.block(0, 0, m, n) = lp.constraints;
  for (Eigen::Index r = 0; r < m; ++r) tab(r, n + r) = 1;
  tab.block(0, n + m, m, 1) = lp.rhs;
  for (Eigen::Index c = 0; c < n; ++c) tab(m, c) = -lp.objective(c);

  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index r = 0; r < m; ++r) basis[r] = n + r;

  for (;;) {
    // Bland: entering = lowest-index column with a negative objective row.
    Eigen::Index enter = -1;
    for (Eigen::Index c = 0; c < n + m; ++c) {
      if (tab(m, c) < 0) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;

    // Leaving: min ratio, ties by lowest basis variable index.
    Eigen::Index leave = -1;
    Rational best_ratio = 0;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (tab(r, enter) <= 0) continue;
      const Rational ratio = tab(r, n + m) / tab(r, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) fail(Errc::unbounded_lp, "LP is unbounded");

    const Rational pivot = tab(leave, enter);
    tab.row(leave) /= pivot;
    for (Eigen::Index r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const Rational factor = tab(r, enter);
      if (factor != 0) tab.row(r) -= factor * tab.row(leave);
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.x = VectorR::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    if (basis[r] < n) sol.x(basis[r]) = tab(r, n + m);
  }
  sol.objective = tab(m, n + m);
  return sol;
}

void dump_lp(const LpProblem& lp, std::ostream& out) {
  out << "max ";
  for (Eigen::Index c = 0; c < lp.objective.size(); ++c) {
    out << (c ? " + " : "") << lp.objective(c).str() << "*x" << c;
  }
  out << "\nsubject to\n";
  for (Eigen::Index r = 0; r < lp.constraints.rows(); ++r) {
    out << " ";
    for (Eigen::Index c = 0; c < lp.constraints.cols(); ++c) {
      out << " " << lp.constraints(r, c).str();
    }
    out << "  <=  " << lp.rhs(r).str() << "\n";
  }
  out << " x >= 0\n";
}

}  // namespace gik
