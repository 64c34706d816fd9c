#ifndef GIK_INSTANCE_HPP
#define GIK_INSTANCE_HPP

#include <memory>
#include <string>
#include <vector>

#include "gik/rational.hpp"

namespace gik {

/// Weights, profits and labels indexed by canonical item id. Shared between an
/// instance and all sub-instances derived from it (residuals, cluster
/// restrictions), which differ only in their active item set and capacities.
struct ItemData {
  VectorR weights;                  // one per canonical id
  MatrixR profits;                  // ids x periods, >= 0
  std::vector<std::string> labels;  // external names; defaults to "0".."n-1"
};

/// A generalized incremental knapsack instance: an active subset of items plus
/// non-decreasing period capacities. Immutable after construction.
struct Instance {
  std::shared_ptr<const ItemData> data;
  std::vector<int> items;  // active canonical ids, strictly increasing
  VectorR capacities;      // length T, non-decreasing

  int periods() const { return static_cast<int>(capacities.size()); }
  int size() const { return static_cast<int>(items.size()); }
  const Rational& weight(int item) const { return data->weights(item); }
  /// p_{it} for period t in 1..T; t = T+1 is the zero-profit overflow slot.
  const Rational& profit(int item, int period) const { return data->profits(item, period - 1); }

  Rational weight_sum() const;
  Rational min_weight() const;  // over active items; 0 when empty
  Rational max_weight() const;

  bool is_active(int item) const;
  /// Canonical cache key: active ids plus capacities.
  std::string key() const;
};

/// Nested insertion history S_1 ⊆ ... ⊆ S_T; each set holds sorted item ids.
struct Chain {
  std::vector<std::vector<int>> sets;

  int periods() const { return static_cast<int>(sets.size()); }
  const std::vector<int>& inserted() const;  // S_T (empty chain: static empty)
  bool empty() const;
};

/// An ordered subset of items; position in `order` is the sequencing position.
struct Permutation {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  bool empty() const { return order.empty(); }
};

/// Per-item evaluation of a permutation: completion times and profit
/// contributions, aligned with the permutation's order.
struct PermEval {
  Rational total;
  std::vector<Rational> completions;
  std::vector<Rational> contributions;
};

/// Fast "best profit at completion c" lookups for one instance.
class ProfitLookup {
 public:
  explicit ProfitLookup(const Instance& inst);
  /// max{p_{it} : t in [T+1], W_t >= completion} under W_{T+1}=inf, p=0.
  Rational best_profit(int item, const Rational& completion) const;
  /// Earliest period attaining that max over t in [T]; 0 when completion > W_T.
  int best_period(int item, const Rational& completion) const;

 private:
  const Instance& inst_;
  MatrixR suffix_max_;  // suffix_max_(i, t-1) = max_{tau >= t} p_{i,tau}
};

// --- construction and validation ---

/// Builds a root instance (items 0..n-1) after checking every invariant:
/// positive weights, non-negative profits, non-decreasing capacities,
/// matching dimensions. Throws Error on violation.
Instance validate_instance(VectorR weights, VectorR capacities, MatrixR profits,
                           std::vector<std::string> labels = {});

/// Same data, all weights and capacities multiplied by 3/w_min so the minimum
/// active weight becomes exactly 3. Profits unchanged. Empty instance: no-op.
Instance scale_to_wmin3(const Instance& inst);

/// Replaces the capacity vector (callers must keep it non-decreasing).
Instance with_capacities(const Instance& inst, VectorR capacities);

void validate_chain(const Instance& inst, const Chain& chain);
void validate_permutation(const Instance& inst, const Permutation& perm);

Chain empty_chain(const Instance& inst);

/// Chain from insertion times (time 0 = never inserted; otherwise 1..T).
Chain chain_from_times(const Instance& inst, const std::vector<std::pair<int, int>>& item_times);

/// Insertion time per item of the chain's inserted set.
std::vector<std::pair<int, int>> insertion_times(const Chain& chain);

// --- profits and feasibility ---

bool chain_feasible(const Instance& inst, const Chain& chain);

/// Φ(S) = Σ_t Σ_{i in S_t \ S_{t-1}} p_{it}.
Rational chain_profit(const Instance& inst, const Chain& chain);

/// Ψ(π) with per-item completions and contributions.
PermEval perm_eval(const Instance& inst, const Permutation& perm);
Rational perm_profit(const Instance& inst, const Permutation& perm);

// --- the sequencing reformulation ---

/// Per-period blocks (ascending id), then the never-inserted items.
/// Guarantees Ψ(π_S) >= Φ(S); requires a feasible chain.
Permutation chain_to_perm(const Instance& inst, const Chain& chain);

/// Inserts every item with completion <= W_T at its best-profit period
/// (ties: earliest). Guarantees Φ(S_π) = Ψ(π) and feasibility.
Chain perm_to_chain(const Instance& inst, const Permutation& perm);

// --- chain algebra ---

Chain restrict_chain(const Chain& chain, const std::vector<int>& group);
/// Periodwise union; the inserted sets must be disjoint.
Chain union_chains(const Chain& a, const Chain& b);

/// Items N \ G_T with capacities W_t' = min_{t<=tau<=T}(W_tau - w(G_tau)).
/// Requires g feasible; the result is a valid instance.
Instance residual_instance(const Instance& inst, const Chain& g);

/// Lexicographic order on serialized chains; the deterministic tie-break used
/// by every max-profit reduction in this library.
bool chain_less(const Chain& a, const Chain& b);

Rational weight_of(const Instance& inst, const std::vector<int>& items);

}  // namespace gik

#endif  // GIK_INSTANCE_HPP
