#include "gik/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "gik/error.hpp"

namespace gik {

namespace {

bool sorted_contains(const std::vector<int>& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

Rational Instance::weight_sum() const {
  Rational sum = 0;
  for (int i : items) sum += data->weights(i);
  return sum;
}

Rational Instance::min_weight() const {
  if (items.empty()) return 0;
  Rational best = data->weights(items.front());
  for (int i : items) best = std::min(best, Rational(data->weights(i)));
  return best;
}

Rational Instance::max_weight() const {
  if (items.empty()) return 0;
  Rational best = data->weights(items.front());
  for (int i : items) best = std::max(best, Rational(data->weights(i)));
  return best;
}

bool Instance::is_active(int item) const { return sorted_contains(items, item); }

std::string Instance::key() const {
  std::ostringstream out;
  for (int i : items) out << i << ',';
  out << '|';
  for (Eigen::Index t = 0; t < capacities.size(); ++t) out << capacities(t).str() << ',';
  return out.str();
}

const std::vector<int>& Chain::inserted() const {
  static const std::vector<int> kEmpty;
  return sets.empty() ? kEmpty : sets.back();
}

bool Chain::empty() const { return inserted().empty(); }

ProfitLookup::ProfitLookup(const Instance& inst) : inst_(inst) {
  const int T = inst.periods();
  const auto& data = *inst.data;
  suffix_max_.resize(data.profits.rows(), T);
  for (int i : inst.items) {
    Rational running = 0;  // p_{i,T+1} = 0
    for (int t = T; t >= 1; --t) {
      running = std::max(running, Rational(data.profits(i, t - 1)));
      suffix_max_(i, t - 1) = running;
    }
  }
}

Rational ProfitLookup::best_profit(int item, const Rational& completion) const {
  const int T = inst_.periods();
  int lo = 1, hi = T + 1;  // first t with W_t >= completion, T+1 if none
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (inst_.capacities(mid - 1) >= completion) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == T + 1) return 0;
  return suffix_max_(item, lo - 1);
}

int ProfitLookup::best_period(int item, const Rational& completion) const {
  const int T = inst_.periods();
  const Rational target = best_profit(item, completion);
  for (int t = 1; t <= T; ++t) {
    if (inst_.capacities(t - 1) >= completion && inst_.profit(item, t) == target) return t;
  }
  return 0;
}

Instance validate_instance(VectorR weights, VectorR capacities, MatrixR profits,
                           std::vector<std::string> labels) {
  const Eigen::Index n = weights.size();
  const Eigen::Index T = capacities.size();
  if (profits.rows() != n || profits.cols() != T) {
    fail(Errc::dimension_mismatch, "profit matrix must be items x periods");
  }
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != n) {
    fail(Errc::dimension_mismatch, "label count must match item count");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (weights(i) <= 0) fail(Errc::non_positive_weight, "weights must be strictly positive");
    for (Eigen::Index t = 0; t < T; ++t) {
      if (profits(i, t) < 0) fail(Errc::negative_profit, "profits must be non-negative");
    }
  }
  for (Eigen::Index t = 0; t + 1 < T; ++t) {
    if (capacities(t) > capacities(t + 1)) {
      fail(Errc::non_monotone_capacities, "capacities must be non-decreasing");
    }
  }
  if (labels.empty()) {
    labels.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  auto data = std::make_shared<ItemData>();
  data->weights = std::move(weights);
  data->profits = std::move(profits);
  data->labels = std::move(labels);
  Instance inst;
  inst.data = std::move(data);
  inst.items.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) inst.items[i] = static_cast<int>(i);
  inst.capacities = std::move(capacities);
  return inst;
}

Instance scale_to_wmin3(const Instance& inst) {
  if (inst.items.empty()) return inst;
  const Rational wmin = inst.min_weight();
  const Rational factor = Rational(3) / wmin;
  if (factor == 1) return inst;
  auto data = std::make_shared<ItemData>(*inst.data);
  data->weights *= factor;
  Instance out = inst;
  out.data = std::move(data);
  out.capacities = inst.capacities * factor;
  return out;
}

Instance with_capacities(const Instance& inst, VectorR capacities) {
  Instance out = inst;
  out.capacities = std::move(capacities);
  return out;
}

void validate_chain(const Instance& inst, const Chain& chain) {
  if (chain.periods() != inst.periods()) {
    fail(Errc::dimension_mismatch, "chain period count must match instance");
  }
  for (int t = 0; t < chain.periods(); ++t) {
    const auto& s = chain.sets[t];
    require(std::is_sorted(s.begin(), s.end()) && std::adjacent_find(s.begin(), s.end()) == s.end(),
            Errc::unknown_item, "chain sets must be sorted and duplicate-free");
    for (int i : s) {
      if (!inst.is_active(i)) fail(Errc::unknown_item, "chain references inactive item");
    }
    if (t > 0 && !is_subset(chain.sets[t - 1], s)) {
      fail(Errc::unknown_item, "chain sets must be nested");
    }
  }
}

void validate_permutation(const Instance& inst, const Permutation& perm) {
  std::set<int> seen;
  for (int i : perm.order) {
    if (!inst.is_active(i)) fail(Errc::unknown_item, "permutation references inactive item");
    if (!seen.insert(i).second) fail(Errc::unknown_item, "permutation repeats an item");
  }
}

Chain empty_chain(const Instance& inst) {
  Chain chain;
  chain.sets.assign(inst.periods(), {});
  return chain;
}

Chain chain_from_times(const Instance& inst, const std::vector<std::pair<int, int>>& item_times) {
  Chain chain = empty_chain(inst);
  for (const auto& [item, time] : item_times) {
    if (!inst.is_active(item)) fail(Errc::unknown_item, "chain_from_times: inactive item");
    if (time < 1 || time > inst.periods()) fail(Errc::out_of_range, "insertion time out of range");
    for (int t = time; t <= inst.periods(); ++t) chain.sets[t - 1].push_back(item);
  }
  for (auto& s : chain.sets) std::sort(s.begin(), s.end());
  validate_chain(inst, chain);
  return chain;
}

std::vector<std::pair<int, int>> insertion_times(const Chain& chain) {
  std::vector<std::pair<int, int>> times;
  std::vector<int> prev;
  for (int t = 1; t <= chain.periods(); ++t) {
    std::vector<int> fresh;
    std::set_difference(chain.sets[t - 1].begin(), chain.sets[t - 1].end(), prev.begin(),
                        prev.end(), std::back_inserter(fresh));
    for (int i : fresh) times.emplace_back(i, t);
    prev = chain.sets[t - 1];
  }
  return times;
}

bool chain_feasible(const Instance& inst, const Chain& chain) {
  validate_chain(inst, chain);
  for (int t = 0; t < chain.periods(); ++t) {
    if (weight_of(inst, chain.sets[t]) > inst.capacities(t)) return false;
  }
  return true;
}

Rational chain_profit(const Instance& inst, const Chain& chain) {
  validate_chain(inst, chain);
  Rational total = 0;
  for (const auto& [item, time] : insertion_times(chain)) total += inst.profit(item, time);
  return total;
}

PermEval perm_eval(const Instance& inst, const Permutation& perm) {
  validate_permutation(inst, perm);
  ProfitLookup lookup(inst);
  PermEval eval;
  eval.total = 0;
  eval.completions.reserve(perm.order.size());
  eval.contributions.reserve(perm.order.size());
  Rational completion = 0;
  for (int i : perm.order) {
    completion += inst.weight(i);
    const Rational phi = lookup.best_profit(i, completion);
    eval.completions.push_back(completion);
    eval.contributions.push_back(phi);
    eval.total += phi;
  }
  return eval;
}

Rational perm_profit(const Instance& inst, const Permutation& perm) {
  return perm_eval(inst, perm).total;
}

Permutation chain_to_perm(const Instance& inst, const Chain& chain) {
  if (!chain_feasible(inst, chain)) fail(Errc::infeasible_chain, "chain_to_perm needs a feasible chain");
  Permutation perm;
  perm.order.reserve(inst.items.size());
  std::vector<int> prev;
  for (int t = 0; t < chain.periods(); ++t) {
    std::vector<int> fresh;
    std::set_difference(chain.sets[t].begin(), chain.sets[t].end(), prev.begin(), prev.end(),
                        std::back_inserter(fresh));
    perm.order.insert(perm.order.end(), fresh.begin(), fresh.end());
    prev = chain.sets[t];
  }
  std::vector<int> rest;
  std::set_difference(inst.items.begin(), inst.items.end(), prev.begin(), prev.end(),
                      std::back_inserter(rest));
  perm.order.insert(perm.order.end(), rest.begin(), rest.end());
  return perm;
}

Chain perm_to_chain(const Instance& inst, const Permutation& perm) {
  validate_permutation(inst, perm);
  ProfitLookup lookup(inst);
  const Rational w_last = inst.periods() == 0 ? Rational(0) : inst.capacities(inst.periods() - 1);
  std::vector<std::pair<int, int>> times;
  Rational completion = 0;
  for (int i : perm.order) {
    completion += inst.weight(i);
    if (inst.periods() == 0 || completion > w_last) continue;
    times.emplace_back(i, lookup.best_period(i, completion));
  }
  return chain_from_times(inst, times);
}

Chain restrict_chain(const Chain& chain, const std::vector<int>& group) {
  std::vector<int> g = group;
  std::sort(g.begin(), g.end());
  Chain out;
  out.sets.reserve(chain.sets.size());
  for (const auto& s : chain.sets) {
    std::vector<int> kept;
    std::set_intersection(s.begin(), s.end(), g.begin(), g.end(), std::back_inserter(kept));
    out.sets.push_back(std::move(kept));
  }
  return out;
}

Chain union_chains(const Chain& a, const Chain& b) {
  require(a.periods() == b.periods(), Errc::dimension_mismatch, "union of unequal-length chains");
  std::vector<int> overlap;
  std::set_intersection(a.inserted().begin(), a.inserted().end(), b.inserted().begin(),
                        b.inserted().end(), std::back_inserter(overlap));
  if (!overlap.empty()) fail(Errc::overlapping_chains, "union of chains with shared items");
  Chain out;
  out.sets.reserve(a.sets.size());
  for (int t = 0; t < a.periods(); ++t) {
    std::vector<int> merged;
    std::set_union(a.sets[t].begin(), a.sets[t].end(), b.sets[t].begin(), b.sets[t].end(),
                   std::back_inserter(merged));
    out.sets.push_back(std::move(merged));
  }
  return out;
}

Instance residual_instance(const Instance& inst, const Chain& g) {
  if (!chain_feasible(inst, g)) fail(Errc::infeasible_chain, "residual of an infeasible chain");
  const int T = inst.periods();
  Instance out = inst;
  out.items.clear();
  std::set_difference(inst.items.begin(), inst.items.end(), g.inserted().begin(),
                      g.inserted().end(), std::back_inserter(out.items));
  VectorR caps(T);
  Rational suffix_min;
  for (int t = T; t >= 1; --t) {
    const Rational slack = inst.capacities(t - 1) - weight_of(inst, g.sets[t - 1]);
    suffix_min = (t == T) ? slack : std::min(suffix_min, slack);
    caps(t - 1) = suffix_min;
  }
  for (int t = 0; t + 1 < T; ++t) {
    require(caps(t) >= 0 && caps(t) <= caps(t + 1), Errc::postcondition_violated,
            "residual capacities must be non-negative and non-decreasing");
  }
  out.capacities = std::move(caps);
  return out;
}

bool chain_less(const Chain& a, const Chain& b) { return a.sets < b.sets; }

Rational weight_of(const Instance& inst, const std::vector<int>& items) {
  Rational sum = 0;
  for (int i : items) sum += inst.weight(i);
  return sum;
}

}  // namespace gik
