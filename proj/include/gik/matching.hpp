#ifndef GIK_MATCHING_HPP
#define GIK_MATCHING_HPP

#include <vector>

#include "gik/rational.hpp"

namespace gik {

struct MatchingEdge {
  int left;
  int right;
  Rational weight;  // >= 0
};

/// Exact maximum-weight bipartite matching (not necessarily perfect) by
/// successive max-gain augmenting paths. Returns right-partner per left node,
/// -1 for unmatched. Deterministic for a fixed edge order.
std::vector<int> max_weight_matching(int left_count, int right_count,
                                     const std::vector<MatchingEdge>& edges);

}  // namespace gik

#endif  // GIK_MATCHING_HPP
