#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace domination {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q" with q > 0, including integers ("3/1", "0/1").
std::string to_fraction_string(const Rational& r);

/// Reduced display form: "p" for integers, "p/q" otherwise.
std::string to_display_string(const Rational& r);

/// Inverse of to_fraction_string / to_display_string. Throws InputError.
Rational parse_rational(const std::string& text);

std::string to_string(const BigInt& n);

bool is_integer(const Rational& r);

/// Returns the value when it fits, nullopt otherwise.
std::optional<std::int64_t> to_int64(const BigInt& n);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace domination
