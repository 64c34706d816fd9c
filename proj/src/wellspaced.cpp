#include "gik/wellspaced.hpp"

#include <algorithm>

#include "gik/classifier.hpp"
#include "gik/error.hpp"

namespace gik {

int WellSpacedInstance::cluster_of(int item) const {
  for (std::size_t m = 0; m < clusters.size(); ++m) {
    if (std::binary_search(clusters[m].begin(), clusters[m].end(), item)) {
      return static_cast<int>(m) + 1;
    }
  }
  return 0;
}

void validate_wellspaced(const WellSpacedInstance& wsi) {
  const int inv = check_epsilon_closed_unit(wsi.epsilon);
  const Rational n(std::max(wsi.source_size, 1));
  std::vector<Rational> lo, hi;  // per-cluster weight extremes
  std::size_t covered = 0;
  for (const auto& cluster : wsi.clusters) {
    require(!cluster.empty(), Errc::postcondition_violated, "well-spaced clusters are non-empty");
    require(std::is_sorted(cluster.begin(), cluster.end()), Errc::postcondition_violated,
            "cluster item lists must be sorted");
    Rational mn = wsi.base.weight(cluster.front());
    Rational mx = mn;
    for (int i : cluster) {
      require(wsi.base.is_active(i), Errc::unknown_item, "cluster item outside the instance");
      mn = std::min(mn, wsi.base.weight(i));
      mx = std::max(mx, wsi.base.weight(i));
    }
    covered += cluster.size();
    lo.push_back(mn);
    hi.push_back(mx);
  }
  require(covered == wsi.base.items.size(), Errc::postcondition_violated,
          "clusters must partition the item set");
  Rational ratio_cap(1);
  for (int j = 0; j < inv; ++j) ratio_cap *= n;  // n^{1/eps}
  for (std::size_t m = 0; m < wsi.clusters.size(); ++m) {
    require(hi[m] <= ratio_cap * lo[m], Errc::postcondition_violated,
            "within-cluster weight ratio exceeds n^{1/eps}");
  }
  for (std::size_t m2 = 0; m2 < wsi.clusters.size(); ++m2) {
    for (std::size_t m1 = 0; m1 < m2; ++m1) {
      Rational gap = n;  // n^{1 + (m2-m1-1)/eps}
      for (std::size_t j = 0; j < (m2 - m1 - 1) * static_cast<std::size_t>(inv); ++j) gap *= n;
      require(lo[m2] >= gap * hi[m1], Errc::postcondition_violated,
              "between-cluster weight gap below n^{1+(m2-m1-1)/eps}");
    }
  }
}

std::vector<WellSpacedInstance> build_wellspaced(const Instance& inst, const Rational& epsilon) {
  const int inv = check_epsilon_unit_regime(epsilon);
  require(inv >= 2, Errc::out_of_range, "well-spaced construction needs 1/eps >= 2");
  const int n = inst.size();

  // Geometric bucketing by powers of n: bucket l holds weights in
  // [n^{l-1} w_min, n^l w_min). Degenerate sizes collapse to one bucket.
  std::vector<int> bucket_of_item(inst.data->weights.size(), 1);
  int bucket_count = 1;
  if (n > 1) {
    const Rational wmin = inst.min_weight();
    for (int i : inst.items) {
      Rational upper = wmin * n;
      int l = 1;
      while (inst.weight(i) >= upper) {
        upper *= n;
        ++l;
      }
      bucket_of_item[i] = l;
      bucket_count = std::max(bucket_count, l);
    }
  }

  std::vector<WellSpacedInstance> candidates;
  for (int r = 0; r < inv; ++r) {
    WellSpacedInstance wsi;
    wsi.shift = r;
    wsi.epsilon = epsilon;
    wsi.source_size = n;
    // Merge maximal runs of surviving buckets into clusters.
    std::vector<std::vector<int>> by_bucket(bucket_count + 1);
    for (int i : inst.items) {
      if (bucket_of_item[i] % inv != r) by_bucket[bucket_of_item[i]].push_back(i);
    }
    std::vector<int> current;
    for (int l = 1; l <= bucket_count; ++l) {
      if (l % inv == r) {
        if (!current.empty()) wsi.clusters.push_back(std::move(current));
        current.clear();
        continue;
      }
      current.insert(current.end(), by_bucket[l].begin(), by_bucket[l].end());
    }
    if (!current.empty()) wsi.clusters.push_back(std::move(current));
    // Drop empty merged runs; M counts the non-empty ones.
    std::vector<int> survivors;
    for (auto& cluster : wsi.clusters) {
      std::sort(cluster.begin(), cluster.end());
      survivors.insert(survivors.end(), cluster.begin(), cluster.end());
    }
    std::sort(survivors.begin(), survivors.end());
    wsi.base = inst;
    wsi.base.items = std::move(survivors);
    validate_wellspaced(wsi);
    candidates.push_back(std::move(wsi));
  }
  return candidates;
}

int cross_count(const WellSpacedInstance& wsi, const Permutation& perm, int m) {
  std::vector<int> m1{m}, m2;
  for (int j = m + 1; j <= wsi.cluster_count(); ++j) m2.push_back(j);
  return cross_between(wsi, perm, m1, m2);
}

int cross_between(const WellSpacedInstance& wsi, const Permutation& perm,
                  const std::vector<int>& m1, const std::vector<int>& m2) {
  int last_m1 = -1;
  for (int pos = 0; pos < perm.size(); ++pos) {
    const int cluster = wsi.cluster_of(perm.order[pos]);
    if (std::find(m1.begin(), m1.end(), cluster) != m1.end()) last_m1 = pos;
  }
  if (last_m1 < 0) return 0;
  int crossing = 0;
  for (int pos = 0; pos < last_m1; ++pos) {
    const int cluster = wsi.cluster_of(perm.order[pos]);
    if (std::find(m2.begin(), m2.end(), cluster) != m2.end()) ++crossing;
  }
  return crossing;
}

}  // namespace gik
