#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "domination/free_product.hpp"
#include "domination/manifold.hpp"
#include "domination/witness.hpp"

namespace domination {

enum class Query { Product, NontrivialBundle, AnyBundle, Presentable };

std::string_view to_string(Query q);
/// "product", "ntbundle", "anybundle", "presentable"; nullopt otherwise.
std::optional<Query> parse_query(std::string_view name);

/// Backing evidence for a YES domination verdict: a finite cover of the
/// target, and for rationally inessential targets additionally the branched
/// double cover of that finite cover #_n(S^2 x S^1).
struct DominationWitness {
  FiniteCoverWitness finite_cover;
  std::optional<BranchedCoverSchema> branched_cover;
};

struct Decision {
  bool verdict = false;
  std::string clause;
  std::optional<DominationWitness> witness;
  std::string explanation;
};

/// 1 -> Z -> Gamma -> pi_1(F) -> 1 over a surface of genus >= 1.
struct CentralExtensionData {
  BigInt base_genus = 1;
  BigInt euler_class = 0;
  bool operator==(const CentralExtensionData&) const = default;
};

struct VirtuallyProductFxZ {
  BigInt genus;
  BigInt degree;  // index of the finite-index subgroup
  bool operator==(const VirtuallyProductFxZ&) const = default;
};
struct VirtuallyFree {
  BigInt rank;
  BigInt degree;
  bool operator==(const VirtuallyFree&) const = default;
};
struct CentralExtension {
  CentralExtensionData data;
  BigInt degree;
  bool operator==(const CentralExtension&) const = default;
};
struct NoCharacterization {
  bool operator==(const NoCharacterization&) const = default;
};

using AlgebraicCharacterization = std::variant<VirtuallyProductFxZ, VirtuallyFree, CentralExtension, NoCharacterization>;

std::string to_string(const AlgebraicCharacterization& a);

/// Finite cover of a Seifert piece with chi_orb <= 0 by a circle bundle over
/// a surface: the least degree d divisible by lcm(alpha_i) with d * chi_orb an
/// even integer; base genus 1 - d * chi_orb / 2, Euler number d * e.
struct SeifertCover {
  BigInt degree;
  BigInt base_genus;
  BigInt euler_number;
};
SeifertCover seifert_finite_cover(const SeifertData& s);

// All decision operations normalize their input first (normalization is
// idempotent); inputs that normalization rejects throw NormalizationError.

Decision dominated_by_product(const Manifold& m);
Decision dominated_by_nontrivial_circle_bundle(const Manifold& m);
Decision dominated_by_any_circle_bundle(const Manifold& m);
/// Throws FiniteGroupError for S^3 and single spherical pieces.
Decision presentable_by_products(const Manifold& m);
Decision decide(Query q, const Manifold& m);

AlgebraicCharacterization algebraic_characterization(const Manifold& m);

/// Verdicts of one decision path for both domination queries.
struct PathVerdicts {
  bool product = false;
  bool nontrivial_bundle = false;
  std::string product_clause;
  std::string bundle_clause;
};

/// Prime decomposition, asphericity and Euler numbers.
PathVerdicts topological_path(const Manifold& m);
/// Thurston geometries of the pieces only.
PathVerdicts geometric_path(const Manifold& m);
/// Group-theoretic characterization of pi_1 only.
PathVerdicts algebraic_path(const Manifold& m);

struct ConsistencyReport {
  Manifold input;
  PathVerdicts topological;
  PathVerdicts geometric;
  PathVerdicts algebraic;

  bool product_agrees() const;
  bool bundle_agrees() const;
  bool consistent() const { return product_agrees() && bundle_agrees(); }
};

ConsistencyReport cross_check(const Manifold& m);

}  // namespace domination
