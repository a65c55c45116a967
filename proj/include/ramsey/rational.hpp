#ifndef RAMSEY_RATIONAL_HPP
#define RAMSEY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ramsey {

// Expression templates off so values compose with std::max and friends.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

/// Accepts "3", "-2", "3/4", "0.125", "1e-4".
auto parse_rational(const std::string & text) -> Rational;

auto to_string(const Rational & q) -> std::string;

/// Decimal rendering with `digits` fractional digits, rounded toward zero.
auto to_decimal(const Rational & q, int digits = 6) -> std::string;

auto floor_of(const Rational & q) -> Integer;
auto ceil_of(const Rational & q) -> Integer;

/// [lo, hi] with lo <= sqrt(q) <= hi; lo == hi exactly when q is the square
/// of a rational. Non-exact enclosures have width at most 10^-12 relative to
/// the denominator scale.
struct SqrtEnclosure
{
    Rational lo, hi;
    auto exact() const -> bool { return lo == hi; }
};

auto sqrt_enclosure(const Rational & q) -> SqrtEnclosure;

/// Exact test of a < sqrt(b) for integers, b >= 0.
auto less_than_sqrt(const Integer & a, const Integer & b) -> bool;

} // namespace ramsey

#endif
