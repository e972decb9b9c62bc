#include "domination/free_product.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "domination/errors.hpp"

namespace domination {

std::optional<FreeProductData> free_product_data(const Manifold& m) {
  FreeProductData d;
  for (const auto& p : m.pieces()) {
    if (std::holds_alternative<S2xS1Piece>(p)) {
      ++d.free_rank;
    } else if (const auto* s = std::get_if<SphericalPiece>(&p)) {
      d.orders.push_back(s->order);
    } else {
      return std::nullopt;
    }
  }
  std::sort(d.orders.begin(), d.orders.end());
  return d;
}

Rational free_product_euler_characteristic(const FreeProductData& d) {
  Rational chi = Rational(1) - Rational(d.free_rank);
  for (std::int64_t q : d.orders) chi -= Rational(1) - Rational(BigInt(1), BigInt(q));
  return chi;
}

FreeCover free_cover_rank(const FreeProductData& d) {
  BigInt m = 1;
  for (std::int64_t q : d.orders) m *= q;
  const Rational n = Rational(1) - Rational(m) * free_product_euler_characteristic(d);
  if (!is_integer(n) || n < 0) {
    throw ConsistencyError("free cover rank " + to_fraction_string(n) + " is not a non-negative integer");
  }
  return {numerator(n), m};
}

std::int64_t nielsen_schreier_rank(std::int64_t rank, std::int64_t index) {
  return 1 + index * (rank - 1);
}

namespace {

class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
      --count_;
    }
  }
  void set_count(std::size_t n) { count_ = n; }
  std::size_t count() const { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t count_ = 0;
};

}  // namespace

std::int64_t reidemeister_schreier_rank_oracle(const FreeProductData& d, std::int64_t max_order) {
  std::int64_t m = 1;
  for (std::int64_t q : d.orders) {
    if (q < 2) throw InputError("finite factor orders must be at least 2");
    if (m > max_order / q) {
      throw OracleBoundError("coset enumeration bound " + std::to_string(max_order) + " exceeded");
    }
    m *= q;
  }
  const std::size_t cosets = static_cast<std::size_t>(m);
  const std::size_t k = d.orders.size();

  // Cosets of the kernel are tuples in Z_{q_1} x ... x Z_{q_k}, encoded in
  // mixed radix. Free generators act trivially; the generator of the i-th
  // cyclic factor increments coordinate i.
  std::vector<std::int64_t> stride(k, 1);
  for (std::size_t i = 1; i < k; ++i) stride[i] = stride[i - 1] * d.orders[i - 1];
  auto act = [&](std::size_t coset, std::size_t i) {
    const auto c = static_cast<std::int64_t>(coset);
    const std::int64_t digit = (c / stride[i]) % d.orders[i];
    const std::int64_t next = (digit + 1) % d.orders[i];
    return static_cast<std::size_t>(c + (next - digit) * stride[i]);
  };

  // Quotient graph: one vertex per coset (trivial central vertex group), one
  // vertex per orbit of each finite factor, a loop per coset and free
  // generator, and an edge from each coset to its orbit vertex of each factor.
  std::vector<std::vector<std::size_t>> orbit_of(k, std::vector<std::size_t>(cosets, 0));
  std::size_t vertices = cosets;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<bool> seen(cosets, false);
    for (std::size_t c = 0; c < cosets; ++c) {
      if (seen[c]) continue;
      const std::size_t id = vertices++;
      for (std::size_t x = c; !seen[x]; x = act(x, i)) {
        seen[x] = true;
        orbit_of[i][x] = id;
      }
    }
  }

  std::int64_t edges = 0;
  Components comps(vertices);
  comps.set_count(vertices);
  for (std::size_t c = 0; c < cosets; ++c) {
    edges += d.free_rank;  // loops c -> c.x_j
    for (std::size_t i = 0; i < k; ++i) {
      comps.unite(c, orbit_of[i][c]);
      ++edges;
    }
  }
  if (comps.count() != 1) throw ConsistencyError("kernel quotient graph is disconnected");
  return edges - static_cast<std::int64_t>(vertices) + 1;
}

}  // namespace domination
