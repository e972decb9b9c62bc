#include "domination/manifold.hpp"

#include <algorithm>

#include "domination/errors.hpp"

namespace domination {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Manifold::Manifold(std::vector<PrimePiece> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end());
}

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::E3: return "E3";
    case Geometry::H2xR: return "H2xR";
    case Geometry::S2xR: return "S2xR";
    case Geometry::S3geom: return "S3geom";
    case Geometry::Nil: return "Nil";
    case Geometry::SL2Rtilde: return "SL2Rtilde";
    case Geometry::H3: return "H3";
    case Geometry::SolGeom: return "SolGeom";
    case Geometry::NonGeometric: return "NonGeometric";
  }
  return "?";
}

std::string to_string(const SeifertData& s) {
  std::string out = "SFS(g=" + std::to_string(s.genus) + ";b=" + std::to_string(s.obstruction);
  for (std::size_t i = 0; i < s.fibers.size(); ++i) {
    out += (i == 0 ? ";" : ",");
    out += "(" + std::to_string(s.fibers[i].alpha) + "," + std::to_string(s.fibers[i].beta) + ")";
  }
  return out + ")";
}

std::string to_string(const PrimePiece& p) {
  return std::visit(Overloaded{
                        [](const SeifertData& s) { return to_string(s); },
                        [](const SphericalPiece& s) { return "Spherical(" + std::to_string(s.order) + ")"; },
                        [](const S2xS1Piece&) { return std::string("S2xS1"); },
                        [](const HyperbolicPiece&) { return std::string("Hyperbolic"); },
                        [](const SolPiece&) { return std::string("Sol"); },
                        [](const OtherAsphericalPiece&) { return std::string("OtherAspherical"); },
                    },
                    p);
}

std::string to_string(const Manifold& m) {
  if (m.empty()) return "S3";
  std::string out;
  for (const auto& p : m.pieces()) {
    if (!out.empty()) out += " # ";
    out += to_string(p);
  }
  return out;
}

bool is_seifert(const PrimePiece& p) { return std::holds_alternative<SeifertData>(p); }

bool is_aspherical(const PrimePiece& p) {
  return !std::holds_alternative<SphericalPiece>(p) && !std::holds_alternative<S2xS1Piece>(p);
}

Geometry classify_geometry(const PrimePiece& p) {
  return std::visit(Overloaded{
                        [](const SeifertData& s) {
                          const Rational chi = orbifold_euler_characteristic(s);
                          if (chi > 0) {
                            throw NormalizationError(
                                "Seifert piece " + to_string(s) +
                                " has positive orbifold Euler characteristic; normalize first");
                          }
                          const bool flat = (chi == 0);
                          if (euler_number(s) == 0) return flat ? Geometry::E3 : Geometry::H2xR;
                          return flat ? Geometry::Nil : Geometry::SL2Rtilde;
                        },
                        [](const SphericalPiece&) { return Geometry::S3geom; },
                        [](const S2xS1Piece&) { return Geometry::S2xR; },
                        [](const HyperbolicPiece&) { return Geometry::H3; },
                        [](const SolPiece&) { return Geometry::SolGeom; },
                        [](const OtherAsphericalPiece&) { return Geometry::NonGeometric; },
                    },
                    p);
}

namespace {

PrimePiece normalize_piece(const PrimePiece& p) {
  if (const auto* sph = std::get_if<SphericalPiece>(&p)) {
    if (sph->order < 2) throw InputError("Spherical order must be at least 2");
    return p;
  }
  const auto* raw = std::get_if<SeifertData>(&p);
  if (raw == nullptr) return p;

  SeifertData s = normalize_seifert(*raw);
  if (orbifold_euler_characteristic(s) <= 0) return s;
  if (euler_number(s) != 0) {
    throw NormalizationError("Seifert piece " + to_string(*raw) +
                             " is a spherical space form: specify as Spherical(order)");
  }
  if (!s.fibers.empty()) {
    throw NormalizationError("Seifert piece " + to_string(*raw) +
                             " has positive orbifold Euler characteristic and exceptional fibres: "
                             "specify as S2xS1 or Spherical(order)");
  }
  return S2xS1Piece{};
}

}  // namespace

Manifold normalize_manifold(const Manifold& m) {
  std::vector<PrimePiece> out;
  out.reserve(m.size());
  for (const auto& p : m.pieces()) out.push_back(normalize_piece(p));
  return Manifold(std::move(out));
}

bool is_rationally_essential(const Manifold& m) {
  return std::any_of(m.pieces().begin(), m.pieces().end(), [](const PrimePiece& p) { return is_aspherical(p); });
}

bool has_finite_fundamental_group(const Manifold& m) {
  return m.empty() || (m.size() == 1 && std::holds_alternative<SphericalPiece>(m.pieces()[0]));
}

Manifold connected_sum_of_s2xs1(std::int64_t n) {
  return Manifold(std::vector<PrimePiece>(static_cast<std::size_t>(n), S2xS1Piece{}));
}

}  // namespace domination
