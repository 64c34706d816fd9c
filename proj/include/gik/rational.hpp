#ifndef GIK_RATIONAL_HPP
#define GIK_RATIONAL_HPP

#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace gik {

/// Exact arbitrary-precision rational; every quantity in this library is one.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using VectorR = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixR = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Parses "p/q" or an integer string. Throws Error{bad_rational} on junk or
/// a zero denominator. Values are canonicalized ("2/4" becomes "1/2").
Rational parse_rational(const std::string& text);

/// Canonical serialization: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer floor_div(const Rational& value);
Integer ceil_div(const Rational& value);

/// floor(a / b) as an integer; b must be nonzero.
Integer floor_ratio(const Rational& a, const Rational& b);

/// Smallest k >= 0 with base^k >= value, for base > 1 and value > 0.
/// Exact-rational replacement for ceil(log_base(value)).
int ceil_log(const Rational& base, const Rational& value);

/// A rational upper bound on ln(x) for x >= 1, tight to ~1e-10.
/// Outward rounding only: the result is never below the true logarithm.
Rational ln_upper_bound(const Rational& x);

}  // namespace gik

#endif  // GIK_RATIONAL_HPP
