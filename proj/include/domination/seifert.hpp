#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "domination/rational.hpp"

namespace domination {

/// Exceptional fibre invariants (alpha, beta) with alpha >= 2.
struct ExceptionalFiber {
  std::int64_t alpha = 2;
  std::int64_t beta = 1;

  auto operator<=>(const ExceptionalFiber&) const = default;
};

/// Seifert invariants of an oriented Seifert fibred space over a closed
/// orientable base of the given genus. `obstruction` is the section
/// obstruction b.
struct SeifertData {
  std::int64_t genus = 0;
  std::int64_t obstruction = 0;
  std::vector<ExceptionalFiber> fibers;

  auto operator<=>(const SeifertData&) const = default;
};

/// Reduces every beta into (0, alpha), folding the integer part into the
/// obstruction and dropping pairs that become ordinary fibres. Fibres are
/// sorted afterwards. Throws InputError for alpha < 2 or a pair with
/// gcd(alpha, beta) > 1 that is not an ordinary fibre.
SeifertData normalize_seifert(const SeifertData& raw);

bool is_normalized(const SeifertData& s);

/// e = -(b + sum beta_i / alpha_i).
Rational euler_number(const SeifertData& s);

/// chi_orb = 2 - 2g - sum (1 - 1/alpha_i).
Rational orbifold_euler_characteristic(const SeifertData& s);

/// lcm of the alpha_i (1 when there are no exceptional fibres).
BigInt fiber_order_lcm(const SeifertData& s);

}  // namespace domination
