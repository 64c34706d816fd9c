#ifndef GIK_HEAVY_DP_HPP
#define GIK_HEAVY_DP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gik/classifier.hpp"
#include "gik/instance.hpp"

namespace gik {

/// The min(1/ε², |S|) heaviest items of S, ties broken toward smaller ids.
std::vector<int> core_of(const Instance& inst, const std::vector<int>& item_set,
                         const Rational& epsilon);

/// True iff every item of the pair completes inside an interval for which it
/// is heavy. `perm` must order exactly `item_set`.
bool is_bulky(const Instance& scaled, const std::vector<int>& item_set, const Permutation& perm,
              const IntervalClassifier& clf);

/// Makespan-minimizing table over states (k, ψ-grid index d, core), stored as
/// dominance steps per (k, core): ascending d with strictly increasing
/// makespan. The full table value is the step lookup below.
struct HeavyDpTable {
  Rational grid_unit;  // ε p_max / n; grid value d maps to profit d * unit
  int d_max = 0;
  int interval_count = 0;
  std::vector<int> local_items;  // local index -> global id
  // layers[k][core_mask][d] = min makespan among states with that exact grid
  // profit; lookup() extends it to all d by suffix minimum.
  std::vector<std::map<std::uint64_t, std::map<int, Rational>>> layers;

  /// F̃(k, d·unit, core); absent (infinite) states return no value.
  std::optional<Rational> lookup(int k, int d, std::uint64_t core_mask) const;
};

/// Bulky-pair DP: the returned permutation satisfies
/// Ψ(π_heavy) >= ψ̃ >= (1-ε)·Ψ_heavy(π*). Requires an instance scaled to
/// w_min = 3 and ε in (0, 1/2) with 1/ε integral.
Permutation solve_heavy(const Instance& scaled, const Rational& epsilon);

/// The DP table alone, for table-shape assertions on tiny instances.
HeavyDpTable heavy_dp_table(const Instance& scaled, const Rational& epsilon);

}  // namespace gik

#endif  // GIK_HEAVY_DP_HPP
