#include "domination/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "domination/errors.hpp"

namespace domination {

namespace {

// b > 0. Computed in 128 bits so that a near INT64_MIN cannot overflow.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const __int128 wide = a;
  __int128 q = wide / b;
  if (wide % b != 0 && wide < 0) --q;
  return static_cast<std::int64_t>(q);
}

std::string pair_text(const ExceptionalFiber& f) {
  return "(" + std::to_string(f.alpha) + "," + std::to_string(f.beta) + ")";
}

}  // namespace

SeifertData normalize_seifert(const SeifertData& raw) {
  if (raw.genus < 0) throw InputError("base genus must be non-negative");
  SeifertData out;
  out.genus = raw.genus;
  out.obstruction = raw.obstruction;
  for (const auto& f : raw.fibers) {
    if (f.alpha < 2) throw InputError("exceptional fibre " + pair_text(f) + " needs alpha >= 2");
    const std::int64_t quotient = floor_div(f.beta, f.alpha);
    const auto remainder =
        static_cast<std::int64_t>(static_cast<__int128>(f.beta) - static_cast<__int128>(quotient) * f.alpha);
    out.obstruction = checked_add(out.obstruction, quotient);
    if (remainder == 0) continue;
    if (std::gcd(f.alpha, remainder) != 1) {
      throw InputError("exceptional fibre " + pair_text(f) + " is not coprime");
    }
    out.fibers.push_back({f.alpha, remainder});
  }
  std::sort(out.fibers.begin(), out.fibers.end());
  return out;
}

bool is_normalized(const SeifertData& s) {
  if (s.genus < 0) return false;
  for (const auto& f : s.fibers) {
    if (f.alpha < 2 || f.beta <= 0 || f.beta >= f.alpha || std::gcd(f.alpha, f.beta) != 1) {
      return false;
    }
  }
  return std::is_sorted(s.fibers.begin(), s.fibers.end());
}

Rational euler_number(const SeifertData& s) {
  Rational sum(s.obstruction);
  for (const auto& f : s.fibers) sum += Rational(BigInt(f.beta), BigInt(f.alpha));
  return -sum;
}

Rational orbifold_euler_characteristic(const SeifertData& s) {
  Rational chi = Rational(2) - Rational(2) * Rational(s.genus);
  for (const auto& f : s.fibers) chi -= Rational(1) - Rational(BigInt(1), BigInt(f.alpha));
  return chi;
}

BigInt fiber_order_lcm(const SeifertData& s) {
  BigInt l = 1;
  for (const auto& f : s.fibers) l = boost::multiprecision::lcm(l, BigInt(f.alpha));
  return l;
}

}  // namespace domination
