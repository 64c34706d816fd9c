#ifndef GIK_TESTS_COMMON_HPP
#define GIK_TESTS_COMMON_HPP

#include <cstdint>
#include <vector>

#include "gik/generator.hpp"
#include "gik/instance.hpp"

namespace gik::testing {

/// The worked example used across the suite: n=3, T=2, w=(3,4,5), W=(7,12),
/// p=[[8,6],[4,9],[5,5]]; optimum 22 via ({0},{0,1,2}).
inline Instance inst_a() {
  VectorR w(3);
  w << 3, 4, 5;
  VectorR caps(2);
  caps << 7, 12;
  MatrixR p(3, 2);
  p(0, 0) = 8; p(0, 1) = 6;
  p(1, 0) = 4; p(1, 1) = 9;
  p(2, 0) = 5; p(2, 1) = 5;
  return validate_instance(w, caps, p);
}

inline Instance tiny(std::uint64_t seed, int n, int T,
                     Family family = Family::uniform) {
  return generate(seed, family, n, T);
}

/// A random not-necessarily-feasible chain for property tests.
inline Chain random_chain(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0xabcdef12345ULL);
  std::vector<std::pair<int, int>> times;
  for (int i : inst.items) {
    const int t = static_cast<int>(rng.below(inst.periods() + 1));
    if (t > 0) times.emplace_back(i, t);
  }
  return chain_from_times(inst, times);
}

inline Permutation random_perm(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x9e3779b9ULL);
  std::vector<int> pool = inst.items;
  Permutation perm;
  const std::uint64_t keep = pool.empty() ? 0 : rng.below(pool.size() + 1);
  for (std::uint64_t j = 0; j < keep; ++j) {
    const std::size_t at = rng.below(pool.size());
    perm.order.push_back(pool[at]);
    pool.erase(pool.begin() + at);
  }
  return perm;
}

}  // namespace gik::testing

#endif  // GIK_TESTS_COMMON_HPP
