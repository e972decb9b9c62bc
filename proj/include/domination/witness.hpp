#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domination/free_group.hpp"
#include "domination/manifold.hpp"
#include "domination/rational.hpp"

namespace domination {

using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

Matrix2 multiply(const Matrix2& a, const Matrix2& b);
std::int64_t determinant(const Matrix2& m);

/// Monodromy of a torus mapping torus together with the hyperelliptic
/// involution -I whose quotient gives the branched cover.
struct MonodromyData {
  Matrix2 matrix{{{1, 1}, {0, 1}}};
  Matrix2 involution{{{-1, 0}, {0, -1}}};
};

/// Number of orbits of the monodromy on the four fixed points of -I, i.e. on
/// (Z/2)^2. Each orbit closes up into one branch circle of the mapping torus.
std::int64_t fixed_point_orbits(const Matrix2& monodromy);

enum class SourceKind { Surface, Product, CircleBundle };

/// Surface: closed surface of `genus` (two-dimensional schemas).
/// Product: Sigma_genus x S^1. CircleBundle: oriented circle bundle over
/// Sigma_genus with the given Euler number.
struct SourceDescriptor {
  SourceKind kind = SourceKind::Product;
  std::int64_t genus = 0;
  std::int64_t euler_number = 0;
};

std::string to_string(const SourceDescriptor& s);

/// Riemann-Hurwitz data of a branched cover of closed surfaces:
/// chi(source) = degree * chi(target) - sum (local_degree - 1).
struct SliceCheck {
  std::string description;
  std::int64_t source_genus = 0;
  std::int64_t target_genus = 0;
  std::int64_t degree = 2;
  std::vector<std::int64_t> local_degrees;  // one entry per branch point
};

/// Surface cover chi(source) = degree * chi(target) without branching.
struct UnramifiedStage {
  std::int64_t degree = 1;
  std::int64_t source_genus = 0;
  std::int64_t target_genus = 0;
  std::int64_t target_free_rank = 2;  // rank of pi_1 of the base connected sum
  std::optional<SubgroupGraph> cover_graph;
};

struct FiberSumRecord {
  std::vector<std::int64_t> summand_euler_numbers;
  std::vector<std::int64_t> summand_base_genera;
  std::int64_t total_euler_number = 0;
  std::int64_t total_base_genus = 0;
};

/// A circle bundle pulled back along a base map: the total-space map has the
/// same degree as the base map, and the Euler number scales by it.
struct PullbackRecord {
  std::int64_t base_map_degree = 1;
  std::int64_t total_space_degree = 1;
  std::int64_t base_euler_number = 0;
  std::int64_t pulled_back_euler_number = 0;
};

/// Images of the source pi_1 generators in the free fundamental group of the
/// target, plus the source relators so that the assignment can be checked to
/// be a homomorphism.
struct Pi1Data {
  std::vector<std::string> source_generators;
  std::vector<Word> source_relators;  // words over the source generators
  std::vector<Word> images;           // words over the target generators
  int target_rank = 0;
};

/// How the number of branch circles follows from the rest of the schema.
enum class BranchLocusRule {
  SlicePoints,       // one branch component per branch point of the slice
  MonodromyOrbits,   // orbits of the monodromy on the fixed points of -I
  Undetermined,      // not claimed; branch_components must be empty
};

struct BranchedCoverSchema {
  std::string construction;  // "pillowcase", "product", "circle_bundle"
  std::int64_t parameter = 0;
  int dimension = 3;
  SourceDescriptor source;
  Manifold target;  // #_n(S^2 x S^1); unused for two-dimensional schemas
  std::int64_t degree = 2;
  std::optional<std::int64_t> branch_components;
  std::vector<std::int64_t> local_degrees;
  BranchLocusRule branch_rule = BranchLocusRule::Undetermined;
  SliceCheck slice_check;
  std::optional<MonodromyData> monodromy;
  std::optional<FiberSumRecord> fiber_sum;
  std::optional<UnramifiedStage> unramified_stage;
  std::optional<PullbackRecord> pullback;
  std::optional<Pi1Data> pi1_data;
  std::vector<std::string> notes;
};

enum class ConstructionStatus { Explicit, ExistenceBacked };

std::string_view to_string(ConstructionStatus s);

enum class CoverKind { Product, CircleBundle, ConnectedSum };

/// A finite cover of the target: F x S^1 (euler 0), a circle bundle over a
/// surface of `genus` with integer Euler number, or #_rank(S^2 x S^1).
struct FiniteCoverWitness {
  CoverKind kind = CoverKind::Product;
  BigInt genus = 0;         // base genus (Product, CircleBundle)
  BigInt euler_number = 0;  // CircleBundle only
  BigInt rank = 0;          // ConnectedSum only
  BigInt degree = 1;
  ConstructionStatus status = ConstructionStatus::Explicit;
  std::string note;
};

std::string describe(const FiniteCoverWitness& w);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
};

/// Schemas carrying explicit subgroup graphs or pi_1 images are capped at this
/// many summands; larger ones keep only the arithmetic records.
constexpr std::int64_t kExplicitDataLimit = 64;

/// Degree-2 branched cover T^2 -> S^2 with four branch points.
BranchedCoverSchema pillowcase_schema();

/// Sigma_n x S^1 -> #_n(S^2 x S^1), branched double cover.
BranchedCoverSchema product_branched_cover_schema(std::int64_t n);

/// Non-trivial circle bundle -> #_n(S^2 x S^1), branched double cover.
BranchedCoverSchema bundle_branched_cover_schema(std::int64_t n);

/// Runs every check the schema's records allow. Never throws on failed
/// checks; they are entries of the report.
VerificationReport verify_schema(const BranchedCoverSchema& s);

/// Simulates cutting the branch circles of the pillowcase product cover
/// inside a ball containing `branch_points_in_disk` branch points, then
/// doubling (`copies` = 2). Returns the number of resulting branch circles.
/// Only (0, 2) and (2, 2) are supported; anything else throws
/// std::invalid_argument.
std::int64_t arc_gluing_oracle(std::int64_t branch_points_in_disk, std::int64_t copies);

}  // namespace domination
