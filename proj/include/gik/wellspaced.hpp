#ifndef GIK_WELLSPACED_HPP
#define GIK_WELLSPACED_HPP

#include <vector>

#include "gik/instance.hpp"

namespace gik {

/// An instance whose items split into ordered clusters with bounded weight
/// spread inside each cluster (factor <= n^{1/ε}) and a super-polynomial gap
/// between clusters (factor >= n^{1+(m2-m1-1)/ε}).
struct WellSpacedInstance {
  Instance base;                          // restricted to the surviving items
  std::vector<std::vector<int>> clusters; // ordered partition of base.items
  int shift = 0;                          // the r that produced this candidate
  Rational epsilon;
  int source_size = 0;                    // n of the instance the gaps refer to

  int cluster_count() const { return static_cast<int>(clusters.size()); }
  /// Cluster index (1-based) of an item; 0 if absent.
  int cluster_of(int item) const;
};

/// Checks both well-spaced properties exactly; throws on violation.
void validate_wellspaced(const WellSpacedInstance& wsi);

/// Buckets items by powers of n, drops every bucket with index ≡ r (mod 1/ε)
/// for each r in 0..1/ε-1, merges surviving runs into clusters, and returns
/// one candidate per r. Each item is dropped by exactly one r. ε in (0,1),
/// 1/ε integer >= 2.
std::vector<WellSpacedInstance> build_wellspaced(const Instance& inst, const Rational& epsilon);

/// Number of items of clusters > m placed before the last cluster-m item;
/// zero when the permutation has no cluster-m item.
int cross_count(const WellSpacedInstance& wsi, const Permutation& perm, int m);

/// cross over explicit index sets: items of M2-indexed clusters before the
/// last item of M1-indexed clusters.
int cross_between(const WellSpacedInstance& wsi, const Permutation& perm,
                  const std::vector<int>& m1, const std::vector<int>& m2);

}  // namespace gik

#endif  // GIK_WELLSPACED_HPP
