#include "gik/qptas.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gik/classifier.hpp"
#include "gik/error.hpp"

namespace gik {

namespace {

void require_integer_weights(const Instance& inst) {
  for (int i : inst.items) {
    if (denominator(inst.weight(i)) != 1) {
      fail(Errc::non_integer_weights, "this step needs integer item weights");
    }
  }
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string probe_key(const Rational& delta, const std::vector<int>& items,
                      const std::vector<int>& required, const Integer& omega) {
  std::ostringstream key;
  key << delta.str() << '|';
  for (int i : items) key << i << ',';
  key << '|';
  for (int i : required) key << i << ',';
  key << '|' << omega.str();
  return key.str();
}

// Runs the ω-parameterized algorithm once: best chain of the clipped
// instance among all guesses of insertion times for the required items, each
// residual solved by the bounded-ratio scheme.
AuxiliaryProbe run_probe(const WellSpacedInstance& wsi, const std::vector<int>& universe,
                         const std::vector<int>& required, const Rational& delta,
                         const Integer& omega, const Rational& epsilon, AuxiliaryCache* cache,
                         const Deadline& deadline) {
  const Instance& base = wsi.base;
  const int T = base.periods();
  VectorR caps(T);
  for (int t = 0; t < T; ++t) {
    const Rational slack = std::max(Rational(0), Rational(base.capacities(t) - delta));
    caps(t) = std::min(slack, Rational(omega));
  }
  Instance clipped = base;
  clipped.items = universe;
  clipped.capacities = std::move(caps);

  AuxiliaryProbe probe;
  bool have_best = false;
  Chain best;
  Rational best_profit = 0;

  std::vector<int> times(required.size(), 1);
  for (;;) {  // all T^{|required|} time assignments, lexicographic
    std::vector<std::pair<int, int>> picks;
    for (std::size_t j = 0; j < required.size(); ++j) picks.emplace_back(required[j], times[j]);
    const Chain guess = chain_from_times(clipped, picks);
    if (chain_feasible(clipped, guess)) {
      const Instance rest = residual_instance(clipped, guess);
      Chain tail;
      if (cache != nullptr) {
        const std::string key = rest.key();
        auto found = cache->chains.find(key);
        if (found != cache->chains.end()) {
          tail = found->second;
        } else {
          tail = qptas_bounded(rest, epsilon, deadline).chain;
          cache->chains.emplace(key, tail);
        }
      } else {
        tail = qptas_bounded(rest, epsilon, deadline).chain;
      }
      Chain combined = union_chains(guess, tail);
      const Rational profit = chain_profit(clipped, combined);
      if (!have_best || profit > best_profit ||
          (profit == best_profit && chain_less(combined, best))) {
        have_best = true;
        best_profit = profit;
        best = std::move(combined);
      }
    }
    if (required.empty()) break;
    std::size_t j = required.size();
    while (j > 0 && times[j - 1] == T) times[--j] = 1;
    if (j == 0) break;
    ++times[j - 1];
  }

  if (!have_best) return probe;  // no chain inserts the required set
  probe.feasible = true;
  probe.extra = best.inserted();
  Permutation full = chain_to_perm(clipped, best);
  full.order.resize(probe.extra.size());  // drop the never-inserted block
  probe.order = full;
  // Shifted profit on the source instance: completing at c here means
  // completing at c + Δ there.
  ProfitLookup lookup(base);
  Rational completion = delta;
  probe.marginal = 0;
  for (int i : probe.order.order) {
    completion += base.weight(i);
    probe.marginal += lookup.best_profit(i, completion);
  }
  return probe;
}

const AuxiliaryProbe& cached_probe(const WellSpacedInstance& wsi, const std::vector<int>& universe,
                                   const std::vector<int>& required, const Rational& delta,
                                   const Integer& omega, const Rational& epsilon,
                                   AuxiliaryCache& cache, const Deadline& deadline) {
  const std::string key = probe_key(delta, universe, required, omega);
  auto found = cache.probes.find(key);
  if (found != cache.probes.end()) return found->second;
  AuxiliaryProbe probe = run_probe(wsi, universe, required, delta, omega, epsilon, &cache, deadline);
  return cache.probes.emplace(key, std::move(probe)).first->second;
}

}  // namespace

std::optional<ExtensionCertificate> auxiliary_extend(const WellSpacedInstance& wsi,
                                                     const ExternalState& from,
                                                     const ExternalState& to,
                                                     const Rational& delta,
                                                     const Rational& epsilon,
                                                     AuxiliaryCache* cache,
                                                     const Deadline& deadline) {
  require(to.m == from.m + 1, Errc::out_of_range, "extension must advance one cluster");
  require(delta >= 0, Errc::out_of_range, "shift must be non-negative");
  require_integer_weights(wsi.base);

  const std::vector<int>& cluster = wsi.clusters[to.m - 1];
  std::vector<int> universe = to.crossing;
  universe.insert(universe.end(), cluster.begin(), cluster.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  universe = sorted_difference(universe, from.crossing);
  const std::vector<int> required = sorted_difference(to.crossing, from.crossing);

  const Rational target = (1 - epsilon) * (to.psi - from.psi);
  Integer total_weight = 0;
  for (int i : universe) total_weight += numerator(wsi.base.weight(i));

  AuxiliaryCache local;
  AuxiliaryCache& probes = cache != nullptr ? *cache : local;
  auto probe_at = [&](const Integer& omega) -> const AuxiliaryProbe& {
    return cached_probe(wsi, universe, required, delta, omega, epsilon, probes, deadline);
  };
  auto satisfies = [&](const AuxiliaryProbe& p) { return p.feasible && p.marginal >= target; };

  if (!satisfies(probe_at(total_weight))) return std::nullopt;
  Integer lo = 0, hi = total_weight;
  while (lo < hi) {
    const Integer mid = (lo + hi) / 2;
    if (satisfies(probe_at(mid))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const AuxiliaryProbe& winner = probe_at(hi);

  ExtensionCertificate cert;
  cert.extra = winner.extra;
  cert.order = winner.order;
  cert.shift = delta;
  cert.marginal = winner.marginal;
  // Constraint 1, exactly: required ⊆ ℰ ⊆ (C_m ⊎ Q_{>m}) \ Q_{>m-1}.
  require(std::includes(cert.extra.begin(), cert.extra.end(), required.begin(), required.end()),
          Errc::postcondition_violated, "certificate must insert every required item");
  require(std::includes(universe.begin(), universe.end(), cert.extra.begin(), cert.extra.end()),
          Errc::postcondition_violated, "certificate items outside the allowed universe");
  return cert;
}

namespace {

struct ExtBackPointer {
  std::vector<int> prev_crossing;
  int prev_d = 0;
  Permutation appended;  // terminal order at m=0, certificate order above
};

struct ExtEntry {
  Rational makespan;
  ExtBackPointer bp;
};

using ExtStepMap = std::map<int, ExtEntry>;

bool insert_ext_step(ExtStepMap& steps, int d, const Rational& makespan, ExtBackPointer bp) {
  auto it = steps.lower_bound(d);
  if (it != steps.end() && it->second.makespan <= makespan) return false;
  if (it != steps.end() && it->first == d) it = steps.erase(it);
  while (it != steps.begin()) {
    auto prev = std::prev(it);
    if (prev->second.makespan < makespan) break;
    it = steps.erase(prev);
  }
  steps.emplace(d, ExtEntry{makespan, std::move(bp)});
  return true;
}

void enumerate_subsets(const std::vector<int>& pool, std::size_t cap,
                       const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    visit(chosen);
    if (chosen.size() == cap) return;
    for (std::size_t pos = from; pos < pool.size(); ++pos) {
      chosen.push_back(pool[pos]);
      walk(pos + 1);
      chosen.pop_back();
    }
  };
  walk(0);
}

}  // namespace

Permutation external_dp(const WellSpacedInstance& wsi, const Rational& epsilon,
                        const Deadline& deadline) {
  const int inv = check_epsilon_unit_regime(epsilon);
  require_integer_weights(wsi.base);
  const Instance& base = wsi.base;
  const int n = base.size();
  const int cluster_count = wsi.cluster_count();
  if (n == 0 || cluster_count == 0) return {};

  Rational p_max = 0;
  for (int i : base.items) {
    for (int t = 1; t <= base.periods(); ++t) {
      if (base.weight(i) <= base.capacities(t - 1)) p_max = std::max(p_max, base.profit(i, t));
    }
  }
  if (p_max == 0) return {};
  const Rational unit = epsilon * p_max / (2 * n);
  const int d_max = 2 * n * n * inv;

  int levels = 0;
  while ((1 << levels) < cluster_count) ++levels;
  const std::size_t budget = static_cast<std::size_t>(levels) * inv;
  require(budget <= 9, Errc::instance_too_large,
          "crossing-set budget too large for terminal enumeration");

  // Terminal layer: F(0, ψ, Q) = w(Q) when some permutation of Q earns ψ.
  ProfitLookup lookup(base);
  std::vector<std::map<std::vector<int>, ExtStepMap>> stages(cluster_count + 1);
  enumerate_subsets(base.items, budget, [&](const std::vector<int>& q) {
    std::vector<int> order = q;
    Rational best = 0;
    std::vector<int> best_order = order;
    do {
      Rational completion = 0, total = 0;
      for (int i : order) {
        completion += base.weight(i);
        total += lookup.best_profit(i, completion);
      }
      if (total > best) {
        best = total;
        best_order = order;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    const int d = std::min<int>(d_max, static_cast<int>(floor_ratio(best, unit)));
    Permutation terminal;
    terminal.order = best_order;
    insert_ext_step(stages[0][q], d, weight_of(base, q),
                    ExtBackPointer{{}, 0, std::move(terminal)});
  });

  AuxiliaryCache cache;
  for (int m = 1; m <= cluster_count; ++m) {
    std::vector<int> upper_pool;  // items of clusters > m
    for (int c = m + 1; c <= cluster_count; ++c) {
      upper_pool.insert(upper_pool.end(), wsi.clusters[c - 1].begin(), wsi.clusters[c - 1].end());
    }
    std::sort(upper_pool.begin(), upper_pool.end());
    std::vector<std::vector<int>> successors;
    enumerate_subsets(upper_pool, budget,
                      [&](const std::vector<int>& q) { successors.push_back(q); });

    for (const auto& [prev_q, steps] : stages[m - 1]) {
      // Conceivable: crossing items not settled by cluster m must persist.
      const std::vector<int> must_keep =
          sorted_difference(prev_q, wsi.clusters[m - 1]);
      for (const auto& next_q : successors) {
        if (!std::includes(next_q.begin(), next_q.end(), must_keep.begin(), must_keep.end())) {
          continue;
        }
        if (deadline.expired()) break;
        for (const auto& [prev_d, entry] : steps) {
          ExternalState from{m - 1, prev_d * unit, prev_q};
          for (int d = d_max; d >= 0; --d) {
            ExternalState to{m, d * unit, next_q};
            const auto cert =
                auxiliary_extend(wsi, from, to, entry.makespan, epsilon, &cache, deadline);
            if (!cert) continue;
            insert_ext_step(stages[m][next_q], d, entry.makespan + weight_of(base, cert->extra),
                            ExtBackPointer{prev_q, prev_d, cert->order});
          }
        }
      }
    }
  }

  // Best final grid profit whose makespan fits W_T.
  const Rational cap = base.periods() == 0 ? Rational(0) : base.capacities(base.periods() - 1);
  const auto final_it = stages[cluster_count].find(std::vector<int>{});
  if (final_it == stages[cluster_count].end()) return {};
  int best_d = -1;
  for (auto it = final_it->second.rbegin(); it != final_it->second.rend(); ++it) {
    if (it->second.makespan <= cap) {
      best_d = it->first;
      break;
    }
  }
  if (best_d < 0) return {};

  std::vector<Permutation> blocks(cluster_count + 1);
  std::vector<int> q{};
  int d = best_d;
  for (int m = cluster_count; m >= 1; --m) {
    const ExtEntry& entry = stages[m].at(q).at(d);
    blocks[m] = entry.bp.appended;
    std::vector<int> prev_q = entry.bp.prev_crossing;
    d = entry.bp.prev_d;
    q = std::move(prev_q);
  }
  blocks[0] = stages[0].at(q).at(d).bp.appended;

  Permutation result;
  for (int m = 0; m <= cluster_count; ++m) {
    result.order.insert(result.order.end(), blocks[m].order.begin(), blocks[m].order.end());
  }
  validate_permutation(base, result);
  require(perm_profit(base, result) >= (1 - epsilon) * (best_d * unit),
          Errc::postcondition_violated, "external DP profit below its certified value");
  for (int m = 1; m <= cluster_count; ++m) {
    require(cross_count(wsi, result, m) <= static_cast<int>(budget), Errc::postcondition_violated,
            "external DP reconstruction is not thin");
  }
  return result;
}

SolveOutcome qptas_general_solve(const Instance& inst, const Rational& epsilon,
                                 const Deadline& deadline) {
  const int inv = check_epsilon_unit_regime(epsilon);
  require(inv >= 2, Errc::out_of_range, "general QPTAS needs 1/eps >= 2");
  SolveOutcome outcome;
  outcome.chain = empty_chain(inst);
  if (inst.items.empty()) return outcome;

  // Integral weights via uniform scaling; profits are untouched, so chains
  // carry back verbatim.
  Integer lcm_den = 1;
  for (int i : inst.items) {
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(inst.weight(i)));
  }
  Instance work = inst;
  if (lcm_den != 1) {
    auto data = std::make_shared<ItemData>(*inst.data);
    data->weights *= Rational(lcm_den);
    work.data = std::move(data);
    work.capacities = inst.capacities * Rational(lcm_den);
  }

  Rational best_profit = 0;
  bool have_best = false;
  for (const WellSpacedInstance& wsi : build_wellspaced(work, epsilon)) {
    if (deadline.expired()) break;
    const Permutation perm = external_dp(wsi, epsilon, deadline);
    Chain chain = perm_to_chain(wsi.base, perm);
    const Rational profit = chain_profit(wsi.base, chain);
    if (!have_best || profit > best_profit ||
        (profit == best_profit && chain_less(chain, outcome.chain))) {
      have_best = true;
      best_profit = profit;
      outcome.chain = std::move(chain);
    }
  }
  outcome.certified = !deadline.tripped();
  require(chain_feasible(inst, outcome.chain), Errc::postcondition_violated,
          "general QPTAS returned an infeasible chain");
  return outcome;
}

}  // namespace gik
