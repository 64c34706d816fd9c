#include "gik/matching.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gik/error.hpp"

namespace gik {

// Potentials-based successive-shortest-augmenting-path assignment (Hungarian
// algorithm) on the square matrix obtained by zero-padding; pairs matched
// through padding or through absent edges are discarded afterwards, which is
// harmless because all real weights are non-negative.
std::vector<int> max_weight_matching(int left_count, int right_count,
                                     const std::vector<MatchingEdge>& edges) {
  const int N = std::max(left_count, right_count);
  std::vector<int> match(left_count, -1);
  if (N == 0) return match;

  std::map<std::pair<int, int>, Rational> weight;
  Rational total = 0;
  for (const auto& e : edges) {
    require(e.left >= 0 && e.left < left_count && e.right >= 0 && e.right < right_count,
            Errc::out_of_range, "matching edge endpoint out of range");
    require(e.weight >= 0, Errc::out_of_range, "matching weights must be non-negative");
    auto [it, fresh] = weight.emplace(std::make_pair(e.left, e.right), e.weight);
    if (!fresh) it->second = std::max(it->second, e.weight);
    total += e.weight;
  }
  const Rational inf = total + 1;

  auto cost = [&](int i, int j) -> Rational {  // minimize -w
    const auto it = weight.find({i, j});
    return it == weight.end() ? Rational(0) : Rational(-it->second);
  };

  std::vector<Rational> u(N + 1, 0), v(N + 1, 0), minv(N + 1, 0);
  std::vector<int> p(N + 1, 0), way(N + 1, 0);
  for (int i = 1; i <= N; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::vector<char> used(N + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      Rational delta = inf;
      int j1 = 0;
      for (int j = 1; j <= N; ++j) {
        if (used[j]) continue;
        const Rational cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= N; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (int j = 1; j <= N; ++j) {
    const int i = p[j];
    if (i >= 1 && i <= left_count && j <= right_count && weight.count({i - 1, j - 1})) {
      match[i - 1] = j - 1;
    }
  }
  return match;
}

}  // namespace gik
