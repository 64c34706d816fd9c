#include "gik/classifier.hpp"

#include <algorithm>

#include "gik/error.hpp"

namespace gik {

namespace {

int checked_inverse(const Rational& epsilon, const Rational& upper, bool closed) {
  if (epsilon <= 0 || epsilon > upper || (!closed && epsilon == upper)) {
    fail(Errc::out_of_range, "epsilon outside its regime");
  }
  const Rational inv = 1 / epsilon;
  if (denominator(inv) != 1) fail(Errc::out_of_range, "1/epsilon must be an integer");
  return static_cast<int>(numerator(inv));
}

}  // namespace

int check_epsilon_half_regime(const Rational& epsilon) {
  return checked_inverse(epsilon, Rational(1, 2), false);
}

int check_epsilon_unit_regime(const Rational& epsilon) {
  return checked_inverse(epsilon, 1, false);
}

int check_epsilon_closed_unit(const Rational& epsilon) { return checked_inverse(epsilon, 1, true); }

IntervalClassifier::IntervalClassifier(const Instance& scaled, const Rational& epsilon)
    : epsilon_(epsilon),
      inv_epsilon_(check_epsilon_half_regime(epsilon)),
      eps_sq_(epsilon * epsilon),
      weight_sum_(scaled.weight_sum()) {
  require(scaled.items.empty() || scaled.min_weight() == 3, Errc::out_of_range,
          "classifier expects an instance scaled to w_min = 3");
  const Rational base = 1 + epsilon_;
  powers_.push_back(1);
  while (powers_.back() < weight_sum_) powers_.push_back(powers_.back() * base);
  k_max_ = static_cast<int>(powers_.size()) - 1;
}

int IntervalClassifier::interval_of(const Rational& completion) const {
  if (completion < 0 || completion > weight_sum_) {
    fail(Errc::out_of_range, "completion outside [0, sum of weights]");
  }
  // Smallest k with completion <= (1+eps)^k.
  const auto it = std::lower_bound(powers_.begin(), powers_.end(), completion);
  return static_cast<int>(it - powers_.begin());
}

std::pair<int, bool> classify(const IntervalClassifier& clf, const Rational& completion,
                              const Rational& item_weight) {
  const int k = clf.interval_of(completion);
  return {k, clf.is_heavy(item_weight, k)};
}

std::pair<Rational, Rational> decompose_profit(const Instance& inst, const Permutation& perm,
                                               const IntervalClassifier& clf) {
  const PermEval eval = perm_eval(inst, perm);
  Rational heavy = 0, light = 0;
  for (std::size_t pos = 0; pos < perm.order.size(); ++pos) {
    const auto [k, is_heavy] = classify(clf, eval.completions[pos], inst.weight(perm.order[pos]));
    (void)k;
    (is_heavy ? heavy : light) += eval.contributions[pos];
  }
  return {heavy, light};
}

}  // namespace gik
