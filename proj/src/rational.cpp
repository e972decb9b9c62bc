#include "domination/rational.hpp"

#include <limits>
#include <stdexcept>

#include "domination/errors.hpp"

namespace domination {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_display_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return to_fraction_string(r);
}

namespace {

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("malformed integer '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw InputError("malformed integer '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const BigInt& n) { return n.str(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::optional<std::int64_t> to_int64(const BigInt& n) {
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(n);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InputError("integer overflow in Seifert data");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InputError("integer overflow in Seifert data");
  return out;
}

}  // namespace domination
