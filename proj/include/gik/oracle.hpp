#ifndef GIK_ORACLE_HPP
#define GIK_ORACLE_HPP

#include <utility>

#include "gik/classifier.hpp"
#include "gik/instance.hpp"

namespace gik {

struct OracleLimits {
  int max_items = 10;
  int max_periods = 5;
};

struct OracleResult {
  Rational opt_profit;
  Chain opt_chain;
  Permutation opt_perm;  // canonical: chain_to_perm of opt_chain
};

/// Exhaustive search over all (T+1)^n insertion-time assignments with
/// per-period prefix feasibility pruning. Deterministic: ties resolved by the
/// lexicographically smallest insertion-time vector (never-inserted = T+1).
OracleResult brute_force(const Instance& inst, const OracleLimits& limits = {});

/// (Ψ_heavy, Ψ_light) of the canonical optimal permutation. `clf` must be
/// built for scale_to_wmin3(inst); the decomposition is evaluated there.
std::pair<Rational, Rational> opt_decomposition(const Instance& inst,
                                                const IntervalClassifier& clf,
                                                const OracleLimits& limits = {});

}  // namespace gik

#endif  // GIK_ORACLE_HPP
