#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domination/seifert.hpp"

namespace domination {

/// Prime piece with finite fundamental group of the given order (>= 2).
struct SphericalPiece {
  std::int64_t order = 2;
  auto operator<=>(const SphericalPiece&) const = default;
};

struct S2xS1Piece {
  auto operator<=>(const S2xS1Piece&) const = default;
};

struct HyperbolicPiece {
  auto operator<=>(const HyperbolicPiece&) const = default;
};

struct SolPiece {
  auto operator<=>(const SolPiece&) const = default;
};

/// Irreducible, aspherical, neither Seifert fibred nor hyperbolic (for
/// instance a graph manifold with non-trivial JSJ decomposition).
struct OtherAsphericalPiece {
  auto operator<=>(const OtherAsphericalPiece&) const = default;
};

using PrimePiece =
    std::variant<SeifertData, SphericalPiece, S2xS1Piece, HyperbolicPiece, SolPiece, OtherAsphericalPiece>;

/// A closed oriented 3-manifold as a multiset of prime pieces. The pieces are
/// kept sorted, so two manifolds with the same multiset compare equal and no
/// operation can observe input order. The empty multiset is S^3.
class Manifold {
 public:
  Manifold() = default;
  explicit Manifold(std::vector<PrimePiece> pieces);

  std::span<const PrimePiece> pieces() const noexcept { return pieces_; }
  std::size_t size() const noexcept { return pieces_.size(); }
  bool empty() const noexcept { return pieces_.empty(); }

  bool operator==(const Manifold&) const = default;
  auto operator<=>(const Manifold&) const = default;

 private:
  std::vector<PrimePiece> pieces_;
};

enum class Geometry { E3, H2xR, S2xR, S3geom, Nil, SL2Rtilde, H3, SolGeom, NonGeometric };

std::string_view to_string(Geometry g);

std::string to_string(const SeifertData& s);
std::string to_string(const PrimePiece& p);
/// Renders in the description grammar; parse_manifold(to_string(m)) == m.
std::string to_string(const Manifold& m);

bool is_seifert(const PrimePiece& p);
bool is_aspherical(const PrimePiece& p);

/// Only valid for normalized pieces; a Seifert piece with chi_orb > 0 throws
/// NormalizationError.
Geometry classify_geometry(const PrimePiece& p);

/// Normalizes every Seifert piece and rewrites or rejects those with positive
/// orbifold Euler characteristic. Idempotent.
Manifold normalize_manifold(const Manifold& m);

/// True iff some prime summand is aspherical. Expects a normalized manifold.
bool is_rationally_essential(const Manifold& m);

/// Finite fundamental group: S^3 or a single spherical piece.
bool has_finite_fundamental_group(const Manifold& m);

/// Builds #_n (S^2 x S^1); n = 0 gives S^3.
Manifold connected_sum_of_s2xs1(std::int64_t n);

}  // namespace domination
