#include "gik/gap.hpp"

#include <algorithm>
#include <ostream>

#include "gik/error.hpp"
#include "gik/matching.hpp"

namespace gik {

GapInstance build_gap(const Instance& scaled, const IntervalClassifier& clf) {
  GapInstance gap;
  gap.base = scaled;
  gap.bucket_count = std::max(0, clf.interval_count() - 1);
  ProfitLookup lookup(scaled);
  gap.capacities.reserve(gap.bucket_count);
  for (int k = 1; k <= gap.bucket_count; ++k) {
    gap.capacities.push_back(clf.power(k) - clf.power(k - 1));
  }
  for (int i : scaled.items) {
    for (int k = 1; k <= gap.bucket_count; ++k) {
      if (clf.is_heavy(scaled.weight(i), k + 1)) continue;  // (k+1)-light only
      gap.allowed.emplace_back(i, k);
      gap.q[{i, k}] = lookup.best_profit(i, clf.power(k));
    }
  }
  return gap;
}

FractionalSolution solve_lp(const GapInstance& gap) {
  FractionalSolution sol;
  const int vars = static_cast<int>(gap.allowed.size());
  if (vars == 0) return sol;

  std::vector<int> item_row_of(gap.base.data->weights.size(), -1);
  std::vector<int> bucket_row_of(gap.bucket_count + 1, -1);
  int rows = 0;
  for (const auto& [i, k] : gap.allowed) {
    if (item_row_of[i] < 0) item_row_of[i] = rows++;
    if (bucket_row_of[k] < 0) bucket_row_of[k] = rows++;
  }

  LpProblem lp;
  lp.constraints = MatrixR::Zero(rows, vars);
  lp.rhs = VectorR::Zero(rows);
  lp.objective = VectorR::Zero(vars);
  for (int c = 0; c < vars; ++c) {
    const auto& [i, k] = gap.allowed[c];
    lp.constraints(item_row_of[i], c) = 1;
    lp.rhs(item_row_of[i]) = 1;
    lp.constraints(bucket_row_of[k], c) = gap.base.weight(i);
    lp.rhs(bucket_row_of[k]) = gap.capacities[k - 1];
    lp.objective(c) = gap.q.at({i, k});
  }

  const LpSolution opt = simplex_maximize(lp);
  sol.objective = opt.objective;
  for (int c = 0; c < vars; ++c) {
    if (opt.x(c) != 0) sol.x[gap.allowed[c]] = opt.x(c);
  }
  return sol;
}

void dump_gap_lp(const GapInstance& gap, std::ostream& out) {
  out << "GAP LP: " << gap.allowed.size() << " variables, buckets 1.." << gap.bucket_count << "\n";
  for (const auto& [pair, profit] : gap.q) {
    out << "  x(" << pair.first << "," << pair.second << ")  q=" << profit.str()
        << "  w=" << gap.base.weight(pair.first).str() << "\n";
  }
  for (int k = 1; k <= gap.bucket_count; ++k) {
    out << "  capacity(B_" << k << ") = " << gap.capacities[k - 1].str() << "\n";
  }
}

namespace {

Rational bucket_load(const GapInstance& gap, const IntegralAssignment& a, int k) {
  Rational load = 0;
  for (const auto& [item, bucket] : a.assign) {
    if (bucket == k) load += gap.base.weight(item);
  }
  return load;
}

}  // namespace

IntegralAssignment st_round(const GapInstance& gap, const FractionalSolution& x) {
  // Slot construction: bucket k gets ceil(sum_i x_ik) unit slots, filled with
  // the fractional mass in non-increasing weight order (split at boundaries).
  struct Slot {
    int bucket;
  };
  std::vector<Slot> slots;
  std::vector<MatchingEdge> edges;
  std::vector<int> left_items;  // matching's left index -> item id
  std::map<int, int> left_of;
  auto left_index = [&](int item) {
    auto [it, fresh] = left_of.emplace(item, static_cast<int>(left_items.size()));
    if (fresh) left_items.push_back(item);
    return it->second;
  };

  for (int k = 1; k <= gap.bucket_count; ++k) {
    std::vector<std::pair<int, Rational>> mass;  // (item, x_ik)
    for (const auto& [pair, value] : x.x) {
      if (pair.second == k && value > 0) mass.emplace_back(pair.first, value);
    }
    if (mass.empty()) continue;
    std::sort(mass.begin(), mass.end(), [&](const auto& a, const auto& b) {
      const Rational& wa = gap.base.weight(a.first);
      const Rational& wb = gap.base.weight(b.first);
      if (wa != wb) return wa > wb;
      return a.first < b.first;
    });
    int slot = static_cast<int>(slots.size());
    slots.push_back({k});
    Rational room(1);
    for (auto& [item, remaining] : mass) {
      bool touched = false;
      while (remaining > 0) {
        if (room == 0) {
          slot = static_cast<int>(slots.size());
          slots.push_back({k});
          room = 1;
          touched = false;
        }
        const Rational piece = std::min(remaining, room);
        if (!touched) {
          edges.push_back({left_index(item), slot, gap.q.at({item, k})});
          touched = true;
        }
        remaining -= piece;
        room -= piece;
      }
    }
  }

  const std::vector<int> match =
      max_weight_matching(static_cast<int>(left_items.size()), static_cast<int>(slots.size()), edges);

  IntegralAssignment rounded;
  for (std::size_t l = 0; l < left_items.size(); ++l) {
    if (match[l] >= 0) rounded.assign[left_items[l]] = slots[match[l]].bucket;
  }

  // Postcondition 1: super-optimal objective.
  require(assignment_objective(gap, rounded) >= x.objective, Errc::postcondition_violated,
          "rounding lost objective value");
  // Postcondition 2: one bucket per item (by construction of the map); check
  // support stays within the allowed pairs.
  for (const auto& [item, bucket] : rounded.assign) {
    require(gap.q.count({item, bucket}) == 1, Errc::postcondition_violated,
            "rounded assignment outside allowed pairs");
  }
  // Postcondition 3: every violated bucket is fixable by one designated item.
  for (const auto& [bucket, item] : designated_infeasibility_items(gap, rounded)) {
    require(bucket_load(gap, rounded, bucket) - gap.base.weight(item) <=
                gap.capacities[bucket - 1],
            Errc::postcondition_violated, "violated bucket not single-item fixable");
  }
  return rounded;
}

std::map<int, int> designated_infeasibility_items(const GapInstance& gap,
                                                  const IntegralAssignment& a) {
  std::map<int, int> designated;  // bucket -> heaviest assigned item
  for (const auto& [item, bucket] : a.assign) {
    auto [it, fresh] = designated.emplace(bucket, item);
    if (!fresh && gap.base.weight(item) > gap.base.weight(it->second)) it->second = item;
  }
  for (auto it = designated.begin(); it != designated.end();) {
    if (bucket_load(gap, a, it->first) <= gap.capacities[it->first - 1]) {
      it = designated.erase(it);  // bucket not violated
    } else {
      ++it;
    }
  }
  return designated;
}

IntegralAssignment greedy_restore(const GapInstance& gap, const IntegralAssignment& rounded) {
  IntegralAssignment kept;
  for (int k = 1; k <= gap.bucket_count; ++k) {
    std::vector<int> members;
    for (const auto& [item, bucket] : rounded.assign) {
      if (bucket == k) members.push_back(item);
    }
    if (members.empty()) continue;
    if (bucket_load(gap, rounded, k) <= gap.capacities[k - 1]) {
      for (int item : members) kept.assign[item] = k;
      continue;
    }
    // Non-increasing q/w density, ties by item id; keep the maximal prefix
    // that fits.
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      const Rational da = gap.q.at({a, k}) / gap.base.weight(a);
      const Rational db = gap.q.at({b, k}) / gap.base.weight(b);
      if (da != db) return da > db;
      return a < b;
    });
    Rational load = 0;
    for (int item : members) {
      if (load + gap.base.weight(item) > gap.capacities[k - 1]) break;
      load += gap.base.weight(item);
      kept.assign[item] = k;
    }
  }
  require(assignment_feasible(gap, kept), Errc::postcondition_violated,
          "greedy restore left an infeasible assignment");
  return kept;
}

Rational assignment_objective(const GapInstance& gap, const IntegralAssignment& a) {
  Rational total = 0;
  for (const auto& [item, bucket] : a.assign) total += gap.q.at({item, bucket});
  return total;
}

bool assignment_feasible(const GapInstance& gap, const IntegralAssignment& a) {
  for (const auto& [item, bucket] : a.assign) {
    if (gap.q.count({item, bucket}) == 0) return false;
  }
  for (int k = 1; k <= gap.bucket_count; ++k) {
    if (bucket_load(gap, a, k) > gap.capacities[k - 1]) return false;
  }
  return true;
}

Permutation assignment_to_perm(const Instance& scaled, const GapInstance& gap,
                               const IntegralAssignment& a) {
  if (!assignment_feasible(gap, a)) {
    fail(Errc::infeasible_assignment, "assignment_to_perm needs a feasible assignment");
  }
  Permutation perm;
  for (int k = 1; k <= gap.bucket_count; ++k) {
    for (const auto& [item, bucket] : a.assign) {  // map order = ascending id
      if (bucket == k) perm.order.push_back(item);
    }
  }
  for (int item : scaled.items) {
    if (a.assign.count(item) == 0) perm.order.push_back(item);
  }
  require(perm_profit(scaled, perm) >= assignment_objective(gap, a), Errc::postcondition_violated,
          "permutation lost assignment profit");
  return perm;
}

Permutation solve_light(const Instance& scaled, const Rational& epsilon) {
  check_epsilon_half_regime(epsilon);
  if (scaled.items.empty()) return {};
  const IntervalClassifier clf(scaled, epsilon);
  const GapInstance gap = build_gap(scaled, clf);
  if (gap.allowed.empty()) return {};
  const FractionalSolution lp = solve_lp(gap);
  const IntegralAssignment rounded = st_round(gap, lp);
  const IntegralAssignment restored = greedy_restore(gap, rounded);
  return assignment_to_perm(scaled, gap, restored);
}

}  // namespace gik
