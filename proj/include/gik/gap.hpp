#ifndef GIK_GAP_HPP
#define GIK_GAP_HPP

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "gik/classifier.hpp"
#include "gik/instance.hpp"
#include "gik/simplex.hpp"

namespace gik {

/// Bucketed generalized-assignment instance: one bucket per interval index
/// k in 1..K-1 with capacity (1+ε)^k - (1+ε)^{k-1}; the pair (i,k) is allowed
/// only when item i is (k+1)-light, with profit
/// q_{ik} = max{p_{it} : W_t >= (1+ε)^k}.
struct GapInstance {
  Instance base;                              // scaled source instance
  int bucket_count = 0;                       // buckets are k = 1..bucket_count
  std::vector<Rational> capacities;           // per bucket, index k-1
  std::vector<std::pair<int, int>> allowed;   // (item, k), lexicographic
  std::map<std::pair<int, int>, Rational> q;  // profit per allowed pair
};

/// Sparse fractional assignment; support is a subset of the allowed pairs.
struct FractionalSolution {
  std::map<std::pair<int, int>, Rational> x;
  Rational objective = 0;
};

/// Partial item -> bucket map.
struct IntegralAssignment {
  std::map<int, int> assign;
};

GapInstance build_gap(const Instance& scaled, const IntervalClassifier& clf);

/// Optimal basic solution of the LP relaxation, in exact rationals.
FractionalSolution solve_lp(const GapInstance& gap);

/// Writes the LP relaxation as a readable tableau (debug aid).
void dump_gap_lp(const GapInstance& gap, std::ostream& out);

/// Shmoys-Tardos style rounding via slot construction plus an exact
/// maximum-profit matching. Postconditions, asserted on every call:
///   1. super-optimality: Σ q_{ik} x̂_{ik} >= objective of x;
///   2. each item in at most one bucket;
///   3. per violated bucket, one designated item whose removal restores it.
IntegralAssignment st_round(const GapInstance& gap, const FractionalSolution& x);

/// Per violated bucket keeps the maximal q/w-density prefix that fits.
IntegralAssignment greedy_restore(const GapInstance& gap, const IntegralAssignment& rounded);

Rational assignment_objective(const GapInstance& gap, const IntegralAssignment& a);
bool assignment_feasible(const GapInstance& gap, const IntegralAssignment& a);

/// Item whose removal certifies postcondition 3 for bucket k, if the bucket
/// is violated (the heaviest-slot item of the rounding).
std::map<int, int> designated_infeasibility_items(const GapInstance& gap,
                                                  const IntegralAssignment& a);

/// Per-bucket blocks in increasing k (ascending id inside), then unassigned
/// items; Ψ(π) >= Σ q_{ik} of the assignment.
Permutation assignment_to_perm(const Instance& scaled, const GapInstance& gap,
                               const IntegralAssignment& a);

/// build_gap -> solve_lp -> st_round -> greedy_restore -> assignment_to_perm.
/// Empty permutation when no pair is allowed.
Permutation solve_light(const Instance& scaled, const Rational& epsilon);

}  // namespace gik

#endif  // GIK_GAP_HPP
