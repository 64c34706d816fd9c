#ifndef GIK_GENERATOR_HPP
#define GIK_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "gik/instance.hpp"

namespace gik {

/// SplitMix64: a published 64-bit counter-based generator with an identical
/// stream on every platform, which keeps generated instances byte-stable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform-ish draw in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

enum class Family {
  uniform,
  time_invariant,         // p_{it} = (T+1-t) * phi_i
  discounted,             // p_{it} = sum_{tau>=t} c_{tau-t} * phi_{i,tau}
  heavy_tail_weights,     // weights spread over several decades
  wellspaced_adversarial  // two far-apart weight groups, big items first
};

Family family_from_name(const std::string& name);  // BadParams on junk
std::string family_name(Family family);

struct GenParams {
  std::uint64_t max_weight = 20;    // uniform weight range 1..max_weight
  std::uint64_t max_profit = 50;    // profit entries 0..max_profit
  Rational discount = Rational(1, 2);
  int weight_decades = 4;           // heavy-tail spread: 10^0 .. 10^{d-1}
};

/// Deterministic for fixed (seed, family, n, T, params); capacities come out
/// sorted. All data are integers.
Instance generate(std::uint64_t seed, Family family, int n, int T, const GenParams& params = {});

/// "family-nN-Tt-sS", the canonical instance id used by the bench harness.
std::string instance_id(Family family, int n, int T, std::uint64_t seed);

}  // namespace gik

#endif  // GIK_GENERATOR_HPP
