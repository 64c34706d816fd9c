#ifndef GIK_BUDGET_HPP
#define GIK_BUDGET_HPP

#include <chrono>

namespace gik {

/// Cooperative wall-clock guard. Solvers poll expired() at enumeration
/// boundaries and degrade gracefully: the best chain found so far is returned
/// and flagged non-certified. No preemption, so partial results are always
/// consistent chains.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after_ms(long long ms) {
    Deadline d;
    d.enabled_ = true;
    d.at_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    return d;
  }

  bool expired() const {
    if (!enabled_) return false;
    if (tripped_) return true;
    if (std::chrono::steady_clock::now() >= at_) tripped_ = true;
    return tripped_;
  }
  /// True once any poll has seen the deadline pass.
  bool tripped() const { return tripped_; }

 private:
  bool enabled_ = false;
  mutable bool tripped_ = false;
  std::chrono::steady_clock::time_point at_;
};

}  // namespace gik

#endif  // GIK_BUDGET_HPP
