#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "domination/manifold.hpp"
#include "domination/rational.hpp"

namespace domination {

/// pi_1 of a rationally inessential manifold, F_l * Q_{l+1} * ... * Q_k, by
/// free rank l and the orders of the finite factors.
struct FreeProductData {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> orders;  // each >= 2

  bool operator==(const FreeProductData&) const = default;
};

/// The free-product data of a normalized manifold with no aspherical
/// summand; nullopt when the manifold is rationally essential.
std::optional<FreeProductData> free_product_data(const Manifold& m);

/// chi = 1 - l - sum (1 - 1/q).
Rational free_product_euler_characteristic(const FreeProductData& d);

/// Kernel of the projection onto the product of the finite factors.
struct FreeCover {
  BigInt rank;    // n: the kernel is free of rank n, the cover is #_n(S^2 x S^1)
  BigInt degree;  // m: product of the orders
};

/// n = 1 - m * chi. Throws ConsistencyError if that is not a non-negative
/// integer.
FreeCover free_cover_rank(const FreeProductData& d);

/// Rank of an index-`index` subgroup of a free group of rank `rank`:
/// 1 + index * (rank - 1).
std::int64_t nielsen_schreier_rank(std::int64_t rank, std::int64_t index);

constexpr std::int64_t kDefaultOracleBound = 10'000;

/// Brute-force kernel rank: enumerates the cosets of the kernel of
/// F_l * Z_{q_1} * ... -> Z_{q_1} x ..., builds the quotient of the
/// Bass-Serre tree by the kernel and returns its first Betti number. Finite
/// factors are realized as cyclic groups. Throws OracleBoundError when the
/// product of the orders exceeds `max_order`.
std::int64_t reidemeister_schreier_rank_oracle(const FreeProductData& d,
                                               std::int64_t max_order = kDefaultOracleBound);

}  // namespace domination
