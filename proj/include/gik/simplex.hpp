#ifndef GIK_SIMPLEX_HPP
#define GIK_SIMPLEX_HPP

#include <iosfwd>

#include "gik/rational.hpp"

namespace gik {

/// max c'x subject to Ax <= b, x >= 0, with b >= 0 (slack basis is feasible).
struct LpProblem {
  MatrixR constraints;  // m x n
  VectorR rhs;          // m, non-negative
  VectorR objective;    // n
};

struct LpSolution {
  Rational objective;
  VectorR x;  // an optimal basic feasible solution
};

/// Dense-tableau primal simplex with Bland's pivoting rule; exact rationals
/// make it immune to cycling-by-rounding and Bland's rule to true cycling.
/// Throws Error{unbounded_lp} if the LP is unbounded.
LpSolution simplex_maximize(const LpProblem& lp);

/// Human-readable tableau dump of the problem (debug aid).
void dump_lp(const LpProblem& lp, std::ostream& out);

}  // namespace gik

#endif  // GIK_SIMPLEX_HPP
