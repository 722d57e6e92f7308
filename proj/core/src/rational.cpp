#include "shg/rational.hpp"

#include <cctype>

#include "shg/errors.hpp"

namespace shg {

std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_compact(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return to_fraction(r);
}

namespace {

bool parse_integer(std::string_view text, Int& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  Int value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = negative ? Int(-value) : value;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Int num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw StructuralError("malformed rational '" + std::string(text) + "'");
  } else {
    if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den))
      throw StructuralError("malformed rational '" + std::string(text) + "'");
    if (den <= 0) throw StructuralError("malformed rational '" + std::string(text) + "': denominator must be positive");
  }
  return Rational(num, den);
}

}  // namespace shg
