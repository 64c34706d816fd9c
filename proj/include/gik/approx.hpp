#ifndef GIK_APPROX_HPP
#define GIK_APPROX_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gik/budget.hpp"
#include "gik/instance.hpp"

namespace gik {

/// Black-box solver returning a feasible chain, with its declared
/// approximation ratio carried as metadata only.
struct AlgorithmHandle {
  std::function<Chain(const Instance&)> solve;
  Rational alpha;  // declared ratio in [0,1], never used for control flow
  std::string name;
};

AlgorithmHandle empty_algorithm();                              // alpha = 0
AlgorithmHandle oracle_algorithm(int max_items, int max_periods);  // alpha = 1

/// Wraps a handle with a cache keyed by (active items, capacities); safe
/// because weights and profits never change across sub-instances.
AlgorithmHandle memoized(AlgorithmHandle inner);

/// The better of perm_to_chain(solve_heavy) and perm_to_chain(solve_light) on
/// the scaled instance, mapped back: Φ >= (1-ε)/2 · OPT.
/// ε in (0, 1/2), 1/ε integral.
Chain solve_half(const Instance& inst, const Rational& epsilon);

enum class CrossingBudgetFormula {
  published,  // ceil(3 ln(n rho) / eps^2), outward-rounded logarithm
  tight,      // 2 ceil(log_{1+eps}(n rho)) / eps
};

/// Enumeration budget for the boosting step: capped at n, floored at
/// min(n, ceil(1/ε)) so degenerate instances stay enumerable.
int crossing_budget(const Instance& inst, const Rational& epsilon,
                    CrossingBudgetFormula formula = CrossingBudgetFormula::published);

/// Enumerates every feasible chain inserting at most crossing_budget items,
/// runs `algo` on each residual instance, and returns the most profitable
/// union: Φ >= Ψ_heavy(π_{S*}) + α·Ψ_light(π_{S*}). The returned chain always
/// dominates algo(inst) because the empty guess is enumerated.
Chain boost_solve(const Instance& inst, const AlgorithmHandle& algo, const Rational& epsilon,
                  const Deadline& deadline = {});

/// max(boost, light chain at tolerance 1/ceil(1/min(δ,49/100))):
/// Φ >= (1-δ)/(2-α) · OPT.
Chain one_step(const Instance& inst, const AlgorithmHandle& algo, const Rational& delta,
               const Deadline& deadline = {});

struct SolveOutcome {
  Chain chain;
  bool certified = true;  // false when the deadline cut the enumeration short
};

/// A_0 = empty; A_r = one_step(A_{r-1}, ε²/2); returns A_{ceil(2/ε)}(inst):
/// Φ >= (1-ε)·OPT. ε in (0,1). Deadline exhaustion returns the best feasible
/// chain found, non-certified.
SolveOutcome qptas_bounded(const Instance& inst, const Rational& epsilon,
                           const Deadline& deadline = {});

/// The ratio recurrence α_0 = 0, α_r = (1-δ)/(2-α_{r-1}), exact rationals.
std::vector<Rational> ratio_sequence(const Rational& delta, int rounds);

}  // namespace gik

#endif  // GIK_APPROX_HPP
