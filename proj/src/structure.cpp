#include "gik/structure.hpp"

#include <algorithm>
#include <map>

#include "gik/classifier.hpp"
#include "gik/error.hpp"

namespace gik {

namespace {

bool index_in(const std::vector<int>& set, int value) {
  return std::find(set.begin(), set.end(), value) != set.end();
}

// First 1/eps items of M+-indexed clusters by position, or empty when the
// (M-, M+)-crossing count is below 1/eps.
std::vector<int> crossing_prefix(const WellSpacedInstance& wsi, const Permutation& perm,
                                 const std::vector<int>& m_minus, const std::vector<int>& m_plus,
                                 int inv) {
  if (cross_between(wsi, perm, m_minus, m_plus) < inv) return {};
  std::vector<int> prefix;
  for (int item : perm.order) {
    if (index_in(m_plus, wsi.cluster_of(item))) {
      prefix.push_back(item);
      if (static_cast<int>(prefix.size()) == inv) break;
    }
  }
  return prefix;
}

std::map<int, Rational> completion_map(const Instance& inst, const Permutation& perm) {
  const PermEval eval = perm_eval(inst, perm);
  std::map<int, Rational> out;
  for (std::size_t pos = 0; pos < perm.order.size(); ++pos) {
    out[perm.order[pos]] = eval.completions[pos];
  }
  return out;
}

}  // namespace

FixResult fix_crossing(const WellSpacedInstance& wsi, const Permutation& perm,
                       const std::vector<int>& m_minus, const std::vector<int>& m_plus,
                       const Permutation& reference) {
  const int inv = check_epsilon_closed_unit(wsi.epsilon);
  if (m_minus.empty() || m_plus.empty() ||
      *std::max_element(m_minus.begin(), m_minus.end()) >=
          *std::min_element(m_plus.begin(), m_plus.end())) {
    fail(Errc::invalid_index_sets, "fix_crossing needs max(M-) < min(M+)");
  }

  const std::vector<int> x_set = crossing_prefix(wsi, perm, m_minus, m_plus, inv);
  if (x_set.empty()) return {perm, std::nullopt};

  const PermEval ref_eval = perm_eval(wsi.base, reference);
  std::map<int, Rational> ref_profit;
  for (std::size_t pos = 0; pos < reference.order.size(); ++pos) {
    ref_profit[reference.order[pos]] = ref_eval.contributions[pos];
  }
  int victim = -1;
  for (int item : x_set) {
    const auto it = ref_profit.find(item);
    require(it != ref_profit.end(), Errc::unknown_item, "X item missing from the reference");
    if (victim < 0 || it->second < ref_profit.at(victim) ||
        (it->second == ref_profit.at(victim) && item < victim)) {
      victim = item;
    }
  }

  const auto victim_pos = std::find(perm.order.begin(), perm.order.end(), victim);
  FixResult result;
  result.removed = victim;
  result.perm.order.assign(perm.order.begin(), victim_pos);
  std::vector<int> pulled, rest;
  for (auto it = std::next(victim_pos); it != perm.order.end(); ++it) {
    (index_in(m_minus, wsi.cluster_of(*it)) ? pulled : rest).push_back(*it);
  }
  result.perm.order.insert(result.perm.order.end(), pulled.begin(), pulled.end());
  result.perm.order.insert(result.perm.order.end(), rest.begin(), rest.end());

  // Property 1: sparse (M-, M+)-crossing.
  require(cross_between(wsi, result.perm, m_minus, m_plus) <= inv, Errc::postcondition_violated,
          "fix_crossing left more than 1/eps crossings");
  // Property 2: completion times never increase. The removed item outweighs
  // the whole pulled block by the cluster gap.
  Rational pulled_weight = 0;
  Rational heaviest_low = 0;
  for (int item : wsi.base.items) {
    if (index_in(m_minus, wsi.cluster_of(item))) {
      heaviest_low = std::max(heaviest_low, Rational(wsi.base.weight(item)));
    }
  }
  for (int item : pulled) pulled_weight += wsi.base.weight(item);
  require(wsi.base.weight(victim) >= wsi.source_size * heaviest_low,
          Errc::postcondition_violated, "cluster gap too small for the pull-back");
  require(wsi.base.weight(victim) >= pulled_weight, Errc::postcondition_violated,
          "removed item lighter than the pulled block");
  const auto before = completion_map(wsi.base, perm);
  const auto after = completion_map(wsi.base, result.perm);
  for (const auto& [item, completion] : after) {
    require(completion <= before.at(item), Errc::postcondition_violated,
            "fix_crossing increased a completion time");
  }
  // Property 3: at most one removed item, a member of X.
  require(index_in(x_set, victim), Errc::postcondition_violated, "victim must come from X");
  return result;
}

namespace {

struct Bisection {
  const WellSpacedInstance& wsi;
  const Permutation& reference;
  int inv;
  std::vector<FixTraceNode> trace;

  Permutation run(int lo, int hi, Permutation perm) {
    if (lo >= hi || perm.empty()) return perm;
    const int mid = lo + (hi - lo) / 2;
    std::vector<int> m_minus, m_plus;
    for (int m = lo; m <= mid; ++m) m_minus.push_back(m);
    for (int m = mid + 1; m <= hi; ++m) m_plus.push_back(m);

    const std::vector<int> x_pre = crossing_prefix(wsi, perm, m_minus, m_plus, inv);
    FixResult fixed = fix_crossing(wsi, perm, m_minus, m_plus, reference);
    trace.push_back({m_minus, m_plus, x_pre, fixed.removed});

    // Left part: prefix ending at the last item of C_{M-} or X; right part:
    // the remaining suffix.
    int boundary = -1;
    for (int pos = 0; pos < fixed.perm.size(); ++pos) {
      const int item = fixed.perm.order[pos];
      if (index_in(m_minus, wsi.cluster_of(item)) || index_in(x_pre, item)) boundary = pos;
    }
    Permutation left, right;
    left.order.assign(fixed.perm.order.begin(), fixed.perm.order.begin() + boundary + 1);
    right.order.assign(fixed.perm.order.begin() + boundary + 1, fixed.perm.order.end());

    Permutation out = run(lo, mid, std::move(left));
    Permutation rhs = run(mid + 1, hi, std::move(right));
    out.order.insert(out.order.end(), rhs.order.begin(), rhs.order.end());
    return out;
  }
};

}  // namespace

SparseResult sparse_transform(const WellSpacedInstance& wsi, const Permutation& opt,
                              const Rational& epsilon) {
  const int inv = check_epsilon_closed_unit(epsilon);
  require(epsilon == wsi.epsilon, Errc::out_of_range,
          "sparse_transform epsilon must match the instance");
  validate_permutation(wsi.base, opt);
  const int m_count = wsi.cluster_count();
  SparseResult result;
  if (m_count <= 1) {
    result.perm = opt;
    return result;
  }
  int levels = 0;
  int padded = 1;
  while (padded < m_count) {
    padded *= 2;
    ++levels;
  }
  Bisection bisection{wsi, opt, inv, {}};
  result.perm = bisection.run(1, padded, opt);
  result.trace = std::move(bisection.trace);

  const int budget = levels * inv;  // ceil(log2 M) / eps
  for (int m = 1; m <= m_count; ++m) {
    require(cross_count(wsi, result.perm, m) <= budget, Errc::postcondition_violated,
            "sparse_transform exceeded the crossing budget");
  }
  const PermEval ref_eval = perm_eval(wsi.base, opt);
  std::map<int, Rational> ref_profit;
  for (std::size_t pos = 0; pos < opt.order.size(); ++pos) {
    ref_profit[opt.order[pos]] = ref_eval.contributions[pos];
  }
  Rational removed_bound = 0;
  for (const auto& node : result.trace) {
    for (int item : node.x_set) removed_bound += ref_profit.at(item);
  }
  const Rational sparse_profit = perm_profit(wsi.base, result.perm);
  require(sparse_profit >= ref_eval.total - epsilon * removed_bound, Errc::postcondition_violated,
          "sparse_transform lost more than the X-set bound");
  require(sparse_profit >= (1 - epsilon) * ref_eval.total, Errc::postcondition_violated,
          "sparse_transform lost more than an epsilon fraction");
  return result;
}

bool verify_disjoint_X(const std::vector<FixTraceNode>& trace) {
  std::vector<int> seen;
  for (const auto& node : trace) {
    for (int item : node.x_set) {
      if (std::find(seen.begin(), seen.end(), item) != seen.end()) return false;
      seen.push_back(item);
    }
  }
  return true;
}

}  // namespace gik
