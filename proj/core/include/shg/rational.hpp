#ifndef SHG_RATIONAL_HPP
#define SHG_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace shg {

// Every quantity in the library is an exact big-integer rational; there is
// no floating point anywhere on a result path. cpp_rational keeps values in
// lowest terms with a positive denominator after every operation, which is
// the canonical form the file format and the LP pivoting rely on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// "p/q" with q >= 1, lowest terms. Used by the structure file format.
std::string to_fraction(const Rational& r);

/// "p" when the value is integral, "p/q" otherwise. Used by reports.
std::string to_compact(const Rational& r);

/// Accepts "p" or "p/q" with q > 0 and optional leading '-' on p.
/// Throws StructuralError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace shg

#endif  // SHG_RATIONAL_HPP
