#ifndef GIK_ERROR_HPP
#define GIK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gik {

enum class Errc {
  non_monotone_capacities,
  non_positive_weight,
  negative_profit,
  dimension_mismatch,
  unknown_item,
  infeasible_chain,
  overlapping_chains,
  instance_too_large,
  out_of_range,
  postcondition_violated,
  infeasible_assignment,
  invalid_index_sets,
  non_integer_weights,
  bad_params,
  bad_rational,
  unbounded_lp,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Internal consistency check; a failure signals a bug, not bad input.
inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace gik

#endif  // GIK_ERROR_HPP
