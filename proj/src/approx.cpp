#include "gik/approx.hpp"

#include <algorithm>
#include <utility>

#include "gik/classifier.hpp"
#include "gik/error.hpp"
#include "gik/gap.hpp"
#include "gik/heavy_dp.hpp"
#include "gik/oracle.hpp"

namespace gik {

AlgorithmHandle empty_algorithm() {
  AlgorithmHandle handle;
  handle.solve = [](const Instance& inst) { return empty_chain(inst); };
  handle.alpha = 0;
  handle.name = "empty";
  return handle;
}

AlgorithmHandle oracle_algorithm(int max_items, int max_periods) {
  AlgorithmHandle handle;
  OracleLimits limits{max_items, max_periods};
  handle.solve = [limits](const Instance& inst) { return brute_force(inst, limits).opt_chain; };
  handle.alpha = 1;
  handle.name = "oracle";
  return handle;
}

AlgorithmHandle memoized(AlgorithmHandle inner) {
  auto cache = std::make_shared<std::map<std::string, Chain>>();
  AlgorithmHandle handle;
  handle.alpha = inner.alpha;
  handle.name = inner.name;
  handle.solve = [inner = std::move(inner), cache](const Instance& inst) {
    const std::string key = inst.key();
    auto found = cache->find(key);
    if (found != cache->end()) return found->second;
    Chain result = inner.solve(inst);
    cache->emplace(key, result);
    return result;
  };
  return handle;
}

Chain solve_half(const Instance& inst, const Rational& epsilon) {
  check_epsilon_half_regime(epsilon);
  if (inst.items.empty()) return empty_chain(inst);
  const Instance scaled = scale_to_wmin3(inst);
  const Permutation heavy = solve_heavy(scaled, epsilon);
  const Permutation light = solve_light(scaled, epsilon);
  const Permutation& better =
      perm_profit(scaled, heavy) >= perm_profit(scaled, light) ? heavy : light;
  return perm_to_chain(scaled, better);
}

int crossing_budget(const Instance& inst, const Rational& epsilon,
                    CrossingBudgetFormula formula) {
  const int n = inst.size();
  if (n == 0) return 0;
  require(epsilon > 0 && epsilon < 1, Errc::out_of_range, "crossing budget needs eps in (0,1)");
  const Rational n_rho = n * inst.max_weight() / inst.min_weight();
  Integer raw;
  if (formula == CrossingBudgetFormula::published) {
    raw = ceil_div(3 * ln_upper_bound(n_rho) / (epsilon * epsilon));
  } else {
    raw = ceil_div(Rational(2 * ceil_log(1 + epsilon, n_rho)) / epsilon);
  }
  const Integer floor_at = ceil_div(1 / epsilon);
  if (raw < floor_at) raw = floor_at;
  if (raw > n) raw = n;
  return static_cast<int>(raw);
}

namespace {

struct GuessEnumerator {
  const Instance& inst;
  const AlgorithmHandle& algo;
  const Deadline& deadline;
  int budget;
  int n, T;
  std::vector<Rational> loads;
  std::vector<std::pair<int, int>> picks;  // (item, period)
  bool found = false;
  Rational best_profit = 0;
  Chain best;

  GuessEnumerator(const Instance& instance, const AlgorithmHandle& algorithm,
                  const Deadline& limit, int max_inserted)
      : inst(instance), algo(algorithm), deadline(limit), budget(max_inserted),
        n(instance.size()), T(instance.periods()) {
    loads.assign(T, Rational(0));
  }

  void consider() {
    const Chain guess = chain_from_times(inst, picks);
    const Instance rest = residual_instance(inst, guess);
    const Chain tail = algo.solve(rest);
    require(chain_feasible(rest, tail), Errc::postcondition_violated,
            "black-box algorithm returned an infeasible chain");
    Chain combined = union_chains(guess, tail);
    require(chain_feasible(inst, combined), Errc::postcondition_violated,
            "union of guess and residual chain must be feasible");
    const Rational profit = chain_profit(inst, combined);
    if (!found || profit > best_profit ||
        (profit == best_profit && chain_less(combined, best))) {
      found = true;
      best_profit = profit;
      best = std::move(combined);
    }
  }

  // Guesses ordered by inserted count, then lexicographic (item, period).
  void expand(int count, int from) {
    if (deadline.expired()) return;
    if (static_cast<int>(picks.size()) == count) {
      consider();
      return;
    }
    for (int pos = from; pos < n; ++pos) {
      const int item = inst.items[pos];
      const Rational& w = inst.weight(item);
      for (int t = 1; t <= T; ++t) {
        bool fits = true;
        for (int tau = t; tau <= T && fits; ++tau) {
          if (loads[tau - 1] + w > inst.capacities(tau - 1)) fits = false;
        }
        if (!fits) continue;
        for (int tau = t; tau <= T; ++tau) loads[tau - 1] += w;
        picks.emplace_back(item, t);
        expand(count, pos + 1);
        picks.pop_back();
        for (int tau = t; tau <= T; ++tau) loads[tau - 1] -= w;
      }
    }
  }
};

}  // namespace

Chain boost_solve(const Instance& inst, const AlgorithmHandle& algo, const Rational& epsilon,
                  const Deadline& deadline) {
  const AlgorithmHandle cached = memoized(algo);
  const int budget = crossing_budget(inst, epsilon);
  GuessEnumerator walker(inst, cached, deadline, budget);
  for (int count = 0; count <= budget && !deadline.expired(); ++count) {
    walker.expand(count, 0);
  }
  if (!walker.found) return empty_chain(inst);  // deadline hit before any guess
  return walker.best;
}

Chain one_step(const Instance& inst, const AlgorithmHandle& algo, const Rational& delta,
               const Deadline& deadline) {
  require(delta > 0 && delta < 1, Errc::out_of_range, "one_step needs delta in (0,1)");
  Chain boosted = boost_solve(inst, algo, delta, deadline);
  // The light solver wants 1/tolerance integral and tolerance < 1/2; rounding
  // delta down only strengthens its guarantee.
  const Rational capped = std::min(delta, Rational(49, 100));
  const Rational light_tol = Rational(1) / ceil_div(1 / capped);
  const Instance scaled = scale_to_wmin3(inst);
  Chain light = perm_to_chain(scaled, solve_light(scaled, light_tol));
  const Rational boosted_profit = chain_profit(inst, boosted);
  const Rational light_profit = chain_profit(inst, light);
  if (light_profit > boosted_profit ||
      (light_profit == boosted_profit && chain_less(light, boosted))) {
    return light;
  }
  return boosted;
}

SolveOutcome qptas_bounded(const Instance& inst, const Rational& epsilon,
                           const Deadline& deadline) {
  require(epsilon > 0 && epsilon < 1, Errc::out_of_range, "qptas needs eps in (0,1)");
  const Rational delta = epsilon * epsilon / 2;
  const int rounds = static_cast<int>(ceil_div(2 / epsilon));
  const std::vector<Rational> ratios = ratio_sequence(delta, rounds);
  AlgorithmHandle current = empty_algorithm();
  for (int r = 1; r <= rounds; ++r) {
    AlgorithmHandle next;
    next.alpha = ratios[r];
    next.name = "A_" + std::to_string(r);
    next.solve = [prev = current, delta, &deadline](const Instance& sub) {
      return one_step(sub, prev, delta, deadline);
    };
    current = memoized(std::move(next));
  }
  SolveOutcome outcome;
  outcome.chain = current.solve(inst);
  outcome.certified = !deadline.tripped();
  return outcome;
}

std::vector<Rational> ratio_sequence(const Rational& delta, int rounds) {
  std::vector<Rational> alphas;
  alphas.reserve(rounds + 1);
  alphas.emplace_back(0);
  for (int r = 1; r <= rounds; ++r) {
    alphas.push_back((1 - delta) / (2 - alphas.back()));
  }
  return alphas;
}

}  // namespace gik
