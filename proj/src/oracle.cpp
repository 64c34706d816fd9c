#include "gik/oracle.hpp"

#include <vector>

#include "gik/error.hpp"

namespace gik {

namespace {

struct Search {
  const Instance& inst;
  int n, T;
  std::vector<int> times;       // per active-item position: 1..T or T+1 (never)
  std::vector<Rational> loads;  // loads[t-1] = weight inserted at periods <= t
  Rational profit = 0;
  bool found = false;
  Rational best_profit = 0;
  std::vector<int> best_times;

  explicit Search(const Instance& instance)
      : inst(instance), n(instance.size()), T(instance.periods()) {
    times.assign(n, 0);
    loads.assign(T, Rational(0));
  }

  void run(int pos) {
    if (pos == n) {
      if (!found || profit > best_profit ||
          (profit == best_profit && times < best_times)) {
        found = true;
        best_profit = profit;
        best_times = times;
      }
      return;
    }
    const int item = inst.items[pos];
    const Rational& w = inst.weight(item);
    for (int t = 1; t <= T; ++t) {
      // Inserting at t loads every period >= t; monotone capacities make the
      // earliest affected period the binding prefix check.
      bool fits = true;
      for (int tau = t; tau <= T && fits; ++tau) {
        if (loads[tau - 1] + w > inst.capacities(tau - 1)) fits = false;
      }
      if (!fits) continue;
      for (int tau = t; tau <= T; ++tau) loads[tau - 1] += w;
      profit += inst.profit(item, t);
      times[pos] = t;
      run(pos + 1);
      times[pos] = 0;
      profit -= inst.profit(item, t);
      for (int tau = t; tau <= T; ++tau) loads[tau - 1] -= w;
    }
    times[pos] = T + 1;  // never inserted
    run(pos + 1);
    times[pos] = 0;
  }
};

}  // namespace

OracleResult brute_force(const Instance& inst, const OracleLimits& limits) {
  if (inst.size() > limits.max_items || inst.periods() > limits.max_periods) {
    fail(Errc::instance_too_large, "brute force limited to " + std::to_string(limits.max_items) +
                                       " items and " + std::to_string(limits.max_periods) +
                                       " periods");
  }
  Search search(inst);
  search.run(0);
  std::vector<std::pair<int, int>> item_times;
  for (int pos = 0; pos < search.n; ++pos) {
    if (search.found && search.best_times[pos] <= search.T) {
      item_times.emplace_back(inst.items[pos], search.best_times[pos]);
    }
  }
  OracleResult result;
  result.opt_chain = chain_from_times(inst, item_times);
  result.opt_profit = search.found ? search.best_profit : Rational(0);
  result.opt_perm = chain_to_perm(inst, result.opt_chain);
  require(chain_profit(inst, result.opt_chain) == result.opt_profit, Errc::postcondition_violated,
          "oracle chain profit mismatch");
  return result;
}

std::pair<Rational, Rational> opt_decomposition(const Instance& inst,
                                                const IntervalClassifier& clf,
                                                const OracleLimits& limits) {
  const OracleResult result = brute_force(inst, limits);
  const Instance scaled = scale_to_wmin3(inst);
  return decompose_profit(scaled, result.opt_perm, clf);
}

}  // namespace gik
