#include "domination/decision.hpp"

#include <algorithm>

#include "domination/errors.hpp"

namespace domination {

namespace {

// Witness schemas list every target summand; beyond this the decision keeps
// the finite-cover witness and skips the branched schema.
constexpr std::int64_t kSchemaSummandLimit = 100'000;

bool is_spherical_sum_geometry(Geometry g) { return g == Geometry::S2xR || g == Geometry::S3geom; }
bool is_product_geometry(Geometry g) { return g == Geometry::E3 || g == Geometry::H2xR; }
bool is_bundle_geometry(Geometry g) { return g == Geometry::Nil || g == Geometry::SL2Rtilde; }

const SeifertData* single_seifert(const Manifold& m) {
  if (m.size() != 1) return nullptr;
  return std::get_if<SeifertData>(&m.pieces()[0]);
}

FiniteCoverWitness seifert_witness(const SeifertData& s, bool product) {
  const SeifertCover cover = seifert_finite_cover(s);
  FiniteCoverWitness w;
  w.kind = product ? CoverKind::Product : CoverKind::CircleBundle;
  w.genus = cover.base_genus;
  w.euler_number = product ? BigInt(0) : cover.euler_number;
  w.degree = cover.degree;
  if (cover.degree == 1 && s.fibers.empty()) {
    w.status = ConstructionStatus::Explicit;
    w.note = "the manifold is itself this circle bundle";
  } else {
    w.status = ConstructionStatus::ExistenceBacked;
    w.note =
        "degree is the least value meeting the orbifold-cover divisibility conditions; a finite cover of this "
        "type exists but is not constructed, and the choice is not canonical";
  }
  return w;
}

DominationWitness free_cover_witness(const FreeProductData& d, bool product_schema) {
  const FreeCover cover = free_cover_rank(d);
  DominationWitness w;
  w.finite_cover.kind = CoverKind::ConnectedSum;
  w.finite_cover.rank = cover.rank;
  w.finite_cover.degree = cover.degree;
  w.finite_cover.status = ConstructionStatus::Explicit;
  w.finite_cover.note = "kernel of the projection of pi_1 onto the product of its finite free factors";
  const auto n = to_int64(cover.rank);
  if (n && *n <= kSchemaSummandLimit) {
    w.branched_cover = product_schema ? product_branched_cover_schema(*n) : bundle_branched_cover_schema(*n);
  } else {
    w.finite_cover.note += "; branched schema omitted for " + cover.rank.str() + " summands";
  }
  return w;
}

std::string sum_description(const FreeProductData& d) {
  return "no aspherical summand: pi_1 = F_" + std::to_string(d.free_rank) + " * " +
         std::to_string(d.orders.size()) + " finite factor(s), finitely covered by #_n(S^2 x S^1)";
}

}  // namespace

std::string_view to_string(Query q) {
  switch (q) {
    case Query::Product: return "product";
    case Query::NontrivialBundle: return "ntbundle";
    case Query::AnyBundle: return "anybundle";
    case Query::Presentable: return "presentable";
  }
  return "?";
}

std::optional<Query> parse_query(std::string_view name) {
  for (Query q : {Query::Product, Query::NontrivialBundle, Query::AnyBundle, Query::Presentable}) {
    if (to_string(q) == name) return q;
  }
  return std::nullopt;
}

std::string to_string(const AlgebraicCharacterization& a) {
  struct Visitor {
    std::string operator()(const VirtuallyProductFxZ& v) const {
      return "VirtuallyProductFxZ(genus=" + v.genus.str() + ", index=" + v.degree.str() + ")";
    }
    std::string operator()(const VirtuallyFree& v) const {
      return "VirtuallyFree(rank=" + v.rank.str() + ", index=" + v.degree.str() + ")";
    }
    std::string operator()(const CentralExtension& v) const {
      return "CentralExtension(base_genus=" + v.data.base_genus.str() + ", euler_class=" +
             v.data.euler_class.str() + ", index=" + v.degree.str() + ")";
    }
    std::string operator()(const NoCharacterization&) const { return "None"; }
  };
  return std::visit(Visitor{}, a);
}

SeifertCover seifert_finite_cover(const SeifertData& s) {
  const Rational chi = orbifold_euler_characteristic(s);
  if (chi > 0) throw NormalizationError("finite circle-bundle covers need chi_orb <= 0");
  const BigInt l = fiber_order_lcm(s);
  SeifertCover out;
  if (chi == 0) {
    out.degree = l;
    out.base_genus = 1;
  } else {
    BigInt d = boost::multiprecision::lcm(l, denominator(chi));
    const BigInt scaled = d * numerator(chi) / denominator(chi);
    if (scaled % 2 != 0) d *= 2;
    out.degree = d;
    const Rational genus = Rational(1) - Rational(d) * chi / 2;
    if (!is_integer(genus)) throw ConsistencyError("cover genus is not an integer");
    out.base_genus = numerator(genus);
  }
  const Rational e = Rational(out.degree) * euler_number(s);
  if (!is_integer(e)) throw ConsistencyError("cover degree does not clear the Euler number");
  out.euler_number = numerator(e);
  return out;
}

PathVerdicts topological_path(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  PathVerdicts v;
  if (!is_rationally_essential(m)) {
    v.product = v.nontrivial_bundle = true;
    v.product_clause = v.bundle_clause = "topological.free_cover";
    return v;
  }
  if (m.size() > 1) {
    v.product_clause = v.bundle_clause = "topological.free_indecomposability";
    return v;
  }
  const SeifertData* s = single_seifert(m);
  if (s == nullptr) {
    v.product_clause = v.bundle_clause = "topological.not_seifert";
    return v;
  }
  if (euler_number(*s) == 0) {
    v.product = true;
    v.product_clause = "topological.product_cover";
    v.bundle_clause = "topological.zero_euler_number";
  } else {
    v.nontrivial_bundle = true;
    v.product_clause = "topological.nonzero_euler_number";
    v.bundle_clause = "topological.nontrivial_bundle_cover";
  }
  return v;
}

PathVerdicts geometric_path(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  std::vector<Geometry> geometries;
  for (const auto& p : m.pieces()) geometries.push_back(classify_geometry(p));
  PathVerdicts v;
  if (std::all_of(geometries.begin(), geometries.end(), is_spherical_sum_geometry)) {
    v.product = v.nontrivial_bundle = true;
    v.product_clause = v.bundle_clause = "geometric.spherical_sum";
    return v;
  }
  if (geometries.size() != 1) {
    v.product_clause = v.bundle_clause = "geometric.not_geometric";
    return v;
  }
  const Geometry g = geometries.front();
  v.product = is_product_geometry(g);
  v.nontrivial_bundle = is_bundle_geometry(g);
  v.product_clause = v.product ? "geometric.product_geometry" : "geometric.excluded_geometry";
  v.bundle_clause = v.nontrivial_bundle ? "geometric.bundle_geometry" : "geometric.excluded_geometry";
  return v;
}

AlgebraicCharacterization algebraic_characterization(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  if (const auto d = free_product_data(m)) {
    const FreeCover cover = free_cover_rank(*d);
    return VirtuallyFree{cover.rank, cover.degree};
  }
  const SeifertData* s = single_seifert(m);
  if (s == nullptr) return NoCharacterization{};
  const SeifertCover cover = seifert_finite_cover(*s);
  if (cover.base_genus < 1) throw ConsistencyError("aspherical Seifert cover with spherical base");
  if (cover.euler_number == 0) return VirtuallyProductFxZ{cover.base_genus, cover.degree};
  return CentralExtension{{cover.base_genus, cover.euler_number}, cover.degree};
}

PathVerdicts algebraic_path(const Manifold& m) {
  const AlgebraicCharacterization a = algebraic_characterization(m);
  PathVerdicts v;
  if (std::holds_alternative<VirtuallyFree>(a)) {
    v.product = v.nontrivial_bundle = true;
    v.product_clause = v.bundle_clause = "algebraic.virtually_free";
  } else if (std::holds_alternative<VirtuallyProductFxZ>(a)) {
    v.product = true;
    v.product_clause = "algebraic.virtually_product";
    v.bundle_clause = "algebraic.no_nontrivial_extension";
  } else if (const auto* c = std::get_if<CentralExtension>(&a)) {
    v.nontrivial_bundle = c->data.euler_class != 0;
    v.product_clause = "algebraic.not_virtually_product";
    v.bundle_clause = "algebraic.central_extension";
  } else {
    v.product_clause = v.bundle_clause = "algebraic.none";
  }
  return v;
}

Decision dominated_by_product(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  Decision d;
  if (const auto fp = free_product_data(m)) {
    d.verdict = true;
    d.clause = "inessential.free_cover";
    d.witness = free_cover_witness(*fp, true);
    d.explanation = sum_description(*fp) + ", which Sigma_n x S^1 covers by a pi_1-surjective branched double cover";
    return d;
  }
  if (m.size() > 1) {
    d.clause = "blocked.free_indecomposability";
    d.explanation =
        "essential connected sum: a dominating product forces a non-trivial central subgroup, so the target "
        "would be freely indecomposable";
    return d;
  }
  const SeifertData* s = single_seifert(m);
  if (s == nullptr) {
    d.clause = "blocked.not_seifert";
    d.explanation = "aspherical prime piece with geometry " + std::string(to_string(classify_geometry(m.pieces()[0]))) +
                    " is not Seifert fibred";
    return d;
  }
  const Rational e = euler_number(*s);
  const Geometry g = classify_geometry(*s);
  if (e != 0) {
    d.clause = "blocked.nonzero_euler_number";
    d.explanation = "Seifert piece with e = " + to_display_string(e) + " (geometry " + std::string(to_string(g)) +
                    "): every map from a product to a finite bundle cover has degree zero";
    return d;
  }
  d.verdict = true;
  d.clause = "seifert.product_cover";
  d.witness = DominationWitness{seifert_witness(*s, true), std::nullopt};
  d.explanation = "Seifert piece with e = 0, chi_orb = " + to_display_string(orbifold_euler_characteristic(*s)) +
                  " (geometry " + std::string(to_string(g)) + "): finitely covered by a product";
  return d;
}

Decision dominated_by_nontrivial_circle_bundle(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  Decision d;
  if (const auto fp = free_product_data(m)) {
    d.verdict = true;
    d.clause = "inessential.free_cover";
    d.witness = free_cover_witness(*fp, false);
    d.explanation = sum_description(*fp) + ", which a non-trivial circle bundle covers by a branched double cover";
    return d;
  }
  if (m.size() > 1) {
    d.clause = "blocked.free_indecomposability";
    d.explanation =
        "essential connected sum: the image of the fibre is a non-trivial central subgroup, so the target would "
        "be prime";
    return d;
  }
  const SeifertData* s = single_seifert(m);
  if (s == nullptr) {
    d.clause = "blocked.not_seifert";
    d.explanation = "aspherical prime piece with geometry " + std::string(to_string(classify_geometry(m.pieces()[0]))) +
                    " is not Seifert fibred";
    return d;
  }
  const Rational e = euler_number(*s);
  const Geometry g = classify_geometry(*s);
  if (e == 0) {
    d.clause = "blocked.zero_euler_number";
    d.explanation = "Seifert piece with e = 0 (geometry " + std::string(to_string(g)) +
                    "): a dominating non-trivial bundle forces non-zero Euler class on the target";
    return d;
  }
  d.verdict = true;
  d.clause = "seifert.nontrivial_bundle_cover";
  d.witness = DominationWitness{seifert_witness(*s, false), std::nullopt};
  d.explanation = "Seifert piece with e = " + to_display_string(e) + " (geometry " + std::string(to_string(g)) +
                  "): finitely covered by a non-trivial circle bundle";
  return d;
}

Decision dominated_by_any_circle_bundle(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  Decision d;
  if (const auto fp = free_product_data(m)) {
    d.verdict = true;
    d.clause = "inessential.free_cover";
    d.witness = free_cover_witness(*fp, true);
    d.explanation = sum_description(*fp) + "; both product and non-trivial bundle branched covers exist";
    return d;
  }
  const SeifertData* s = single_seifert(m);
  if (s == nullptr) {
    d.clause = m.size() > 1 ? "blocked.free_indecomposability" : "blocked.not_seifert";
    d.explanation = "rationally essential and not Seifert fibred, hence not dominated by any circle bundle";
    return d;
  }
  const bool product = euler_number(*s) == 0;
  d.verdict = true;
  d.clause = "seifert.circle_bundle_cover";
  d.witness = DominationWitness{seifert_witness(*s, product), std::nullopt};
  d.explanation = "Seifert fibred (geometry " + std::string(to_string(classify_geometry(*s))) +
                  "), hence finitely covered by a circle bundle";
  return d;
}

Decision presentable_by_products(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  if (has_finite_fundamental_group(m)) {
    throw FiniteGroupError("finite fundamental group: presentability by products is defined for infinite groups only");
  }
  Decision d;
  if (m.size() == 1) {
    const PrimePiece& p = m.pieces()[0];
    if (is_seifert(p)) {
      d.verdict = true;
      d.clause = "presentable.seifert";
      d.explanation = "Seifert manifold: a finite-index subgroup has infinite centre";
    } else if (std::holds_alternative<S2xS1Piece>(p)) {
      d.verdict = true;
      d.clause = "presentable.seifert";
      d.explanation = "S^2 x S^1 is Seifert fibred; pi_1 = Z is central in itself";
    } else {
      d.clause = "blocked.not_seifert";
      d.explanation = "prime, aspherical and not Seifert fibred";
    }
    return d;
  }
  const Manifold z2z2(std::vector<PrimePiece>{SphericalPiece{2}, SphericalPiece{2}});
  if (m == z2z2) {
    d.verdict = true;
    d.clause = "presentable.z2_free_z2";
    d.explanation = "Z/2 * Z/2 is virtually Z";
    return d;
  }
  d.clause = "blocked.free_product";
  d.explanation = "non-trivial free product other than Z/2 * Z/2";
  return d;
}

Decision decide(Query q, const Manifold& m) {
  switch (q) {
    case Query::Product: return dominated_by_product(m);
    case Query::NontrivialBundle: return dominated_by_nontrivial_circle_bundle(m);
    case Query::AnyBundle: return dominated_by_any_circle_bundle(m);
    case Query::Presentable: return presentable_by_products(m);
  }
  throw std::invalid_argument("unknown query");
}

bool ConsistencyReport::product_agrees() const {
  return topological.product == geometric.product && geometric.product == algebraic.product;
}

bool ConsistencyReport::bundle_agrees() const {
  return topological.nontrivial_bundle == geometric.nontrivial_bundle &&
         geometric.nontrivial_bundle == algebraic.nontrivial_bundle;
}

ConsistencyReport cross_check(const Manifold& raw) {
  const Manifold m = normalize_manifold(raw);
  return ConsistencyReport{m, topological_path(m), geometric_path(m), algebraic_path(m)};
}

}  // namespace domination
