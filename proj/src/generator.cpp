#include "gik/generator.hpp"

#include <algorithm>

#include "gik/error.hpp"

namespace gik {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  require(bound > 0, Errc::bad_params, "empty draw range");
  return next() % bound;
}

Family family_from_name(const std::string& name) {
  if (name == "uniform") return Family::uniform;
  if (name == "time-invariant") return Family::time_invariant;
  if (name == "discounted") return Family::discounted;
  if (name == "heavy-tail-weights") return Family::heavy_tail_weights;
  if (name == "well-spaced-adversarial") return Family::wellspaced_adversarial;
  fail(Errc::bad_params, "unknown family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::uniform: return "uniform";
    case Family::time_invariant: return "time-invariant";
    case Family::discounted: return "discounted";
    case Family::heavy_tail_weights: return "heavy-tail-weights";
    case Family::wellspaced_adversarial: return "well-spaced-adversarial";
  }
  fail(Errc::bad_params, "unknown family enum");
}

namespace {

VectorR sorted_capacities(SplitMix64& rng, int T, const Rational& weight_sum) {
  const Integer total = numerator(weight_sum);
  std::vector<std::uint64_t> raw(T);
  for (int t = 0; t < T; ++t) {
    raw[t] = rng.below(static_cast<std::uint64_t>(total) + 1);
  }
  std::sort(raw.begin(), raw.end());
  VectorR caps(T);
  for (int t = 0; t < T; ++t) caps(t) = raw[t];
  return caps;
}

}  // namespace

Instance generate(std::uint64_t seed, Family family, int n, int T, const GenParams& params) {
  if (n < 0 || T < 1) fail(Errc::bad_params, "need n >= 0 and T >= 1");
  SplitMix64 rng(seed * 0x51ab2cd1d01ULL + static_cast<std::uint64_t>(family) + 1);

  VectorR weights(n);
  MatrixR profits = MatrixR::Zero(n, T);
  switch (family) {
    case Family::uniform:
    case Family::time_invariant:
    case Family::discounted:
      for (int i = 0; i < n; ++i) weights(i) = 1 + rng.below(params.max_weight);
      break;
    case Family::heavy_tail_weights:
      for (int i = 0; i < n; ++i) {
        Integer scale = 1;
        const int decade = static_cast<int>(rng.below(std::max(1, params.weight_decades)));
        for (int d = 0; d < decade; ++d) scale *= 10;
        weights(i) = Rational(Integer(1 + rng.below(9)) * scale);
      }
      break;
    case Family::wellspaced_adversarial: {
      const int big = std::max(n / 2, n > 0 ? 1 : 0);
      for (int i = 0; i < big; ++i) {
        weights(i) = Rational(3 * n * n * (1 + static_cast<int>(rng.below(3))));
      }
      for (int i = big; i < n; ++i) weights(i) = Rational(3 + static_cast<int>(rng.below(3)));
      break;
    }
  }

  switch (family) {
    case Family::uniform:
    case Family::heavy_tail_weights:
      for (int i = 0; i < n; ++i) {
        for (int t = 0; t < T; ++t) profits(i, t) = rng.below(params.max_profit + 1);
      }
      break;
    case Family::time_invariant:
      for (int i = 0; i < n; ++i) {
        const std::uint64_t phi = 1 + rng.below(params.max_profit);
        for (int t = 1; t <= T; ++t) profits(i, t - 1) = Rational((T + 1 - t) * phi);
      }
      break;
    case Family::discounted: {
      // Per-period profits phi_{i,tau}, discounted by c_{tau-t}; a global
      // den^{T-1} factor keeps everything integral.
      const Integer num = numerator(params.discount);
      const Integer den = denominator(params.discount);
      for (int i = 0; i < n; ++i) {
        std::vector<Integer> phi(T);
        for (int t = 0; t < T; ++t) phi[t] = Integer(rng.below(params.max_profit + 1));
        for (int t = 1; t <= T; ++t) {
          Integer value = 0;
          Integer factor_num = 1;
          for (int tau = t; tau <= T; ++tau) {
            Integer factor_den = 1;
            for (int j = 0; j < T - 1 - (tau - t); ++j) factor_den *= den;
            value += phi[tau - 1] * factor_num * factor_den;
            factor_num *= num;
          }
          profits(i, t - 1) = Rational(value);
        }
      }
      break;
    }
    case Family::wellspaced_adversarial: {
      const int big = std::max(n / 2, n > 0 ? 1 : 0);
      for (int i = 0; i < n; ++i) {
        const std::uint64_t phi =
            i < big ? 40 + rng.below(params.max_profit) : 1 + rng.below(5);
        for (int t = 1; t <= T; ++t) profits(i, t - 1) = Rational((T + 1 - t) * phi);
      }
      break;
    }
  }

  Rational weight_sum = 0;
  for (int i = 0; i < n; ++i) weight_sum += weights(i);
  VectorR caps;
  if (family == Family::wellspaced_adversarial) {
    caps = VectorR::Constant(T, weight_sum);  // everything fits from the start
  } else if (n == 0) {
    caps = VectorR::Zero(T);
  } else {
    caps = sorted_capacities(rng, T, weight_sum);
  }
  return validate_instance(std::move(weights), std::move(caps), std::move(profits));
}

std::string instance_id(Family family, int n, int T, std::uint64_t seed) {
  return family_name(family) + "-n" + std::to_string(n) + "-T" + std::to_string(T) + "-s" +
         std::to_string(seed);
}

}  // namespace gik
