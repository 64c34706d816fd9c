#include "gik/heavy_dp.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "gik/error.hpp"

namespace gik {

std::vector<int> core_of(const Instance& inst, const std::vector<int>& item_set,
                         const Rational& epsilon) {
  const int inv = check_epsilon_closed_unit(epsilon);
  const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(inv) * inv,
                                                item_set.size());
  std::vector<int> sorted = item_set;
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    if (inst.weight(a) != inst.weight(b)) return inst.weight(a) > inst.weight(b);
    return a < b;
  });
  sorted.resize(cap);
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

bool is_bulky(const Instance& scaled, const std::vector<int>& item_set, const Permutation& perm,
              const IntervalClassifier& clf) {
  std::vector<int> ordered = perm.order;
  std::vector<int> expected = item_set;
  std::sort(ordered.begin(), ordered.end());
  std::sort(expected.begin(), expected.end());
  require(ordered == expected, Errc::unknown_item, "is_bulky: permutation must cover the set");
  Rational completion = 0;
  for (int i : perm.order) {
    completion += scaled.weight(i);
    const auto [k, heavy] = classify(clf, completion, scaled.weight(i));
    (void)k;
    if (!heavy) return false;
  }
  return true;
}

namespace {

struct BackPointer {
  std::uint64_t prev_core = 0;
  int prev_d = 0;
  std::uint64_t q_mask = 0;
  std::vector<int> order;  // local indices, internal order of Q
};

struct Entry {
  Rational makespan;
  BackPointer bp;
};

// Step map per core: ascending d, strictly increasing makespan; for one
// makespan only the largest attaining d is kept.
using StepMap = std::map<int, Entry>;

bool insert_step(StepMap& steps, int d, const Rational& makespan, BackPointer bp) {
  auto it = steps.lower_bound(d);
  if (it != steps.end() && it->second.makespan <= makespan) return false;
  if (it != steps.end() && it->first == d) it = steps.erase(it);  // same d, worse makespan
  while (it != steps.begin()) {
    auto prev = std::prev(it);
    if (prev->second.makespan < makespan) break;
    it = steps.erase(prev);
  }
  steps.emplace(d, Entry{makespan, std::move(bp)});
  return true;
}

struct Builder {
  const Instance& inst;
  const IntervalClassifier& clf;
  int inv_eps;
  int n;
  std::vector<int> local_items;          // local -> global
  std::vector<Rational> weight;          // by local index
  std::vector<int> heaviness_rank;       // locals sorted by (weight desc, id asc)
  int core_cap;
  Rational p_max;
  Rational unit;
  int d_max = 0;
  std::vector<std::map<std::uint64_t, StepMap>> layers;
  // Best profit and internal order for appending Q after a prefix of a given
  // makespan; neither depends on the layer index.
  std::map<std::pair<Rational, std::uint64_t>, std::pair<Rational, std::vector<int>>> sigma_cache;
  std::optional<ProfitLookup> lookup;

  Builder(const Instance& instance, const IntervalClassifier& classifier)
      : inst(instance), clf(classifier) {
    inv_eps = clf.inv_epsilon();
    n = inst.size();
    require(n <= 62, Errc::instance_too_large, "heavy DP uses 64-bit item masks");
    local_items = inst.items;
    weight.reserve(n);
    for (int i : local_items) weight.push_back(inst.weight(i));
    heaviness_rank.resize(n);
    for (int l = 0; l < n; ++l) heaviness_rank[l] = l;
    std::sort(heaviness_rank.begin(), heaviness_rank.end(), [&](int a, int b) {
      if (weight[a] != weight[b]) return weight[a] > weight[b];
      return local_items[a] < local_items[b];
    });
    core_cap = std::min(inv_eps * inv_eps, n);
    lookup.emplace(inst);
    p_max = 0;
    const int T = inst.periods();
    for (int i : inst.items) {
      for (int t = 1; t <= T; ++t) {
        if (inst.weight(i) <= inst.capacities(t - 1)) p_max = std::max(p_max, inst.profit(i, t));
      }
    }
    if (p_max > 0) {
      unit = clf.epsilon() * p_max / n;
      d_max = n * n * inv_eps;
    }
  }

  std::uint64_t core_of_mask(std::uint64_t mask) const {
    std::uint64_t core = 0;
    int taken = 0;
    for (int l : heaviness_rank) {
      if (taken == core_cap) break;
      if (mask >> l & 1) {
        core |= std::uint64_t(1) << l;
        ++taken;
      }
    }
    return core;
  }

  Rational mask_weight(std::uint64_t mask) const {
    Rational sum = 0;
    for (int l = 0; l < n; ++l) {
      if (mask >> l & 1) sum += weight[l];
    }
    return sum;
  }

  // Max over internal orders of Q of the shifted profit sum, where each
  // completion is offset by the predecessor makespan.
  const std::pair<Rational, std::vector<int>>& sigma(const Rational& shift, std::uint64_t q_mask) {
    const auto key = std::make_pair(shift, q_mask);
    auto found = sigma_cache.find(key);
    if (found != sigma_cache.end()) return found->second;
    std::vector<int> members;
    for (int l = 0; l < n; ++l) {
      if (q_mask >> l & 1) members.push_back(l);
    }
    Rational best = 0;
    std::vector<int> best_order = members;
    std::vector<int> order = members;
    bool first = true;
    do {
      Rational completion = shift;
      Rational total = 0;
      for (int l : order) {
        completion += weight[l];
        total += lookup->best_profit(local_items[l], completion);
      }
      if (first || total > best) {
        best = total;
        best_order = order;
        first = false;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    return sigma_cache.emplace(key, std::make_pair(best, best_order)).first->second;
  }

  void enumerate_q(const std::vector<int>& allowed, std::size_t from, std::uint64_t q_mask,
                   int picked, const std::function<void(std::uint64_t)>& visit) {
    visit(q_mask);
    if (picked == inv_eps) return;
    for (std::size_t pos = from; pos < allowed.size(); ++pos) {
      enumerate_q(allowed, pos + 1, q_mask | (std::uint64_t(1) << allowed[pos]), picked + 1,
                  visit);
    }
  }

  void build() {
    const int K = clf.interval_count();
    layers.assign(K + 1, {});
    layers[0][0].emplace(0, Entry{Rational(0), BackPointer{}});
    if (p_max == 0) return;
    for (int k = 1; k <= K; ++k) {
      const Rational threshold = clf.heavy_threshold(k);
      std::vector<int> heavy_locals;
      for (int l = 0; l < n; ++l) {
        if (weight[l] >= threshold) heavy_locals.push_back(l);
      }
      const Rational& limit = clf.power(k);
      for (const auto& [core, steps] : layers[k - 1]) {
        std::vector<int> allowed;
        for (int l : heavy_locals) {
          if (!(core >> l & 1)) allowed.push_back(l);
        }
        for (const auto& [d, entry] : steps) {
          const Rational& span = entry.makespan;
          enumerate_q(allowed, 0, 0, 0, [&](std::uint64_t q_mask) {
            const Rational q_weight = mask_weight(q_mask);
            if (span + q_weight > limit) return;  // top-index condition
            const auto& [gain, order] = sigma(span, q_mask);
            const int d_next =
                std::min<int>(d_max, d + static_cast<int>(floor_ratio(gain, unit)));
            const std::uint64_t next_core = core_of_mask(core | q_mask);
            insert_step(layers[k][next_core], d_next, span + q_weight,
                        BackPointer{core, d, q_mask, order});
          });
        }
      }
    }
  }
};

}  // namespace

std::optional<Rational> HeavyDpTable::lookup(int k, int d, std::uint64_t core_mask) const {
  const auto core_it = layers[k].find(core_mask);
  if (core_it == layers[k].end()) return std::nullopt;
  const auto step = core_it->second.lower_bound(d);
  if (step == core_it->second.end()) return std::nullopt;
  return step->second;
}

HeavyDpTable heavy_dp_table(const Instance& scaled, const Rational& epsilon) {
  const IntervalClassifier clf(scaled, epsilon);
  Builder builder(scaled, clf);
  builder.build();
  HeavyDpTable table;
  table.grid_unit = builder.unit;
  table.d_max = builder.d_max;
  table.interval_count = clf.interval_count();
  table.local_items = builder.local_items;
  table.layers.resize(builder.layers.size());
  for (std::size_t k = 0; k < builder.layers.size(); ++k) {
    for (const auto& [core, steps] : builder.layers[k]) {
      for (const auto& [d, entry] : steps) table.layers[k][core][d] = entry.makespan;
    }
  }
  return table;
}

Permutation solve_heavy(const Instance& scaled, const Rational& epsilon) {
  if (scaled.items.empty()) return {};
  const IntervalClassifier clf(scaled, epsilon);
  Builder builder(scaled, clf);
  builder.build();
  if (builder.p_max == 0) return {};

  const int K = clf.interval_count();
  // Maximal attainable grid profit; ties toward smaller makespan, then
  // smaller core mask.
  int best_d = -1;
  Rational best_span;
  std::uint64_t best_core = 0;
  for (const auto& [core, steps] : builder.layers[K]) {
    if (steps.empty()) continue;
    const auto& [d, entry] = *steps.rbegin();
    if (d > best_d || (d == best_d && (entry.makespan < best_span ||
                                       (entry.makespan == best_span && core < best_core)))) {
      best_d = d;
      best_span = entry.makespan;
      best_core = core;
    }
  }
  require(best_d >= 0, Errc::postcondition_violated, "heavy DP lost its base state");

  std::vector<std::vector<int>> blocks(K + 1);
  std::uint64_t core = best_core;
  int d = best_d;
  for (int k = K; k >= 1; --k) {
    const auto& entry = builder.layers[k].at(core).at(d);
    blocks[k] = entry.bp.order;
    core = entry.bp.prev_core;
    d = entry.bp.prev_d;
  }
  require(core == 0 && d == 0, Errc::postcondition_violated, "heavy DP backtrack did not reach base");

  Permutation perm;
  std::vector<int> packed;
  for (int k = 1; k <= K; ++k) {
    for (int l : blocks[k]) {
      perm.order.push_back(builder.local_items[l]);
      packed.push_back(builder.local_items[l]);
    }
  }
  std::sort(packed.begin(), packed.end());
  require(std::adjacent_find(packed.begin(), packed.end()) == packed.end(),
          Errc::postcondition_violated, "heavy DP reconstructed a repeated item");
  require(weight_of(scaled, packed) == best_span, Errc::postcondition_violated,
          "heavy DP makespan mismatch");
  require(is_bulky(scaled, packed, perm, clf), Errc::postcondition_violated,
          "heavy DP reconstruction is not bulky");
  require(perm_profit(scaled, perm) >= best_d * builder.unit, Errc::postcondition_violated,
          "heavy DP profit below its certified grid value");
  return perm;
}

}  // namespace gik
