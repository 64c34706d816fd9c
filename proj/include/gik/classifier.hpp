#ifndef GIK_CLASSIFIER_HPP
#define GIK_CLASSIFIER_HPP

#include <utility>
#include <vector>

#include "gik/instance.hpp"
#include "gik/rational.hpp"

namespace gik {

/// Geometric partition of [0, Σw] into I_0 = [0,1] and
/// I_k = ((1+ε)^{k-1}, (1+ε)^k], with the weight thresholds ε²(1+ε)^k that
/// separate k-heavy from k-light items. Built for an instance scaled to
/// w_min = 3 and an accuracy ε in (0, 1/2) with 1/ε integral.
class IntervalClassifier {
 public:
  IntervalClassifier(const Instance& scaled, const Rational& epsilon);

  const Rational& epsilon() const { return epsilon_; }
  int inv_epsilon() const { return inv_epsilon_; }
  int interval_count() const { return k_max_; }  // K

  /// (1+ε)^k for k in 0..K.
  const Rational& power(int k) const { return powers_[k]; }
  /// ε²(1+ε)^k.
  Rational heavy_threshold(int k) const { return eps_sq_ * powers_[k]; }
  bool is_heavy(const Rational& weight, int k) const { return weight >= heavy_threshold(k); }

  /// Index of the interval containing `completion`; OutOfRange outside [0, Σw].
  int interval_of(const Rational& completion) const;

  const Rational& weight_sum() const { return weight_sum_; }

 private:
  Rational epsilon_;
  int inv_epsilon_;
  Rational eps_sq_;
  Rational weight_sum_;
  int k_max_;
  std::vector<Rational> powers_;
};

/// (interval index, is_heavy) for an item of the given weight completing at
/// `completion`.
std::pair<int, bool> classify(const IntervalClassifier& clf, const Rational& completion,
                              const Rational& item_weight);

/// Splits Ψ(π) into heavy and light parts; the parts sum to Ψ(π) exactly.
std::pair<Rational, Rational> decompose_profit(const Instance& inst, const Permutation& perm,
                                               const IntervalClassifier& clf);

/// Validates ε in (0, 1/2) with 1/ε a positive integer and returns 1/ε.
int check_epsilon_half_regime(const Rational& epsilon);
/// Validates ε in (0, 1) with 1/ε a positive integer and returns 1/ε.
int check_epsilon_unit_regime(const Rational& epsilon);
/// As above but admitting ε = 1 (used by the structural transforms).
int check_epsilon_closed_unit(const Rational& epsilon);

}  // namespace gik

#endif  // GIK_CLASSIFIER_HPP
