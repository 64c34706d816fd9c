#ifndef GIK_STRUCTURE_HPP
#define GIK_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "gik/wellspaced.hpp"

namespace gik {

struct FixResult {
  Permutation perm;
  std::optional<int> removed;  // member of the crossing prefix X, when present
};

/// One application of the crossing-fix: when at least 1/ε items of M+-indexed
/// clusters precede the last M--indexed item, removes the reference-cheapest
/// of the first 1/ε such items and pulls every later M- item into its slot.
/// Postconditions asserted: crossing <= 1/ε, completion times never increase,
/// at most one removed item and it belongs to X.
FixResult fix_crossing(const WellSpacedInstance& wsi, const Permutation& perm,
                       const std::vector<int>& m_minus, const std::vector<int>& m_plus,
                       const Permutation& reference);

/// One node of the bisection trace: the index-set pair, the crossing prefix X
/// it inspected, and the removed item if any.
struct FixTraceNode {
  std::vector<int> m_minus;
  std::vector<int> m_plus;
  std::vector<int> x_set;
  std::optional<int> removed;
};

struct SparseResult {
  Permutation perm;
  std::vector<FixTraceNode> trace;
};

/// Recursive bisection of the cluster indices (padded to a power of two with
/// empty clusters), fixing crossings at every node. Asserts
/// cross_m <= ceil(log2 M)/ε for all m and Ψ(π_sparse) >= (1-ε)·Ψ(opt).
SparseResult sparse_transform(const WellSpacedInstance& wsi, const Permutation& opt,
                              const Rational& epsilon);

/// Pairwise disjointness of all X sets recorded in a trace.
bool verify_disjoint_X(const std::vector<FixTraceNode>& trace);

}  // namespace gik

#endif  // GIK_STRUCTURE_HPP
