#include "domination/witness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "domination/free_product.hpp"

namespace domination {

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return out;
}

std::int64_t determinant(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

std::int64_t fixed_point_orbits(const Matrix2& monodromy) {
  // Points of (Z/2)^2 encoded as 2*x + y.
  auto apply = [&](int p) {
    const std::int64_t x = p >> 1, y = p & 1;
    const std::int64_t nx = ((monodromy[0][0] * x + monodromy[0][1] * y) % 2 + 2) % 2;
    const std::int64_t ny = ((monodromy[1][0] * x + monodromy[1][1] * y) % 2 + 2) % 2;
    return static_cast<int>(2 * nx + ny);
  };
  std::array<bool, 4> seen{};
  std::int64_t orbits = 0;
  for (int p = 0; p < 4; ++p) {
    if (seen[p]) continue;
    ++orbits;
    for (int q = p; !seen[q]; q = apply(q)) seen[q] = true;
  }
  return orbits;
}

std::string to_string(const SourceDescriptor& s) {
  const std::string surface = "Sigma_" + std::to_string(s.genus);
  switch (s.kind) {
    case SourceKind::Surface: return surface;
    case SourceKind::Product: return surface + " x S^1";
    case SourceKind::CircleBundle:
      return "circle bundle over " + surface + " with Euler number " + std::to_string(s.euler_number);
  }
  return "?";
}

std::string_view to_string(ConstructionStatus s) {
  return s == ConstructionStatus::Explicit ? "explicit" : "existence-backed";
}

std::string describe(const FiniteCoverWitness& w) {
  std::string what;
  switch (w.kind) {
    case CoverKind::Product: what = "Sigma_" + w.genus.str() + " x S^1"; break;
    case CoverKind::CircleBundle:
      what = "circle bundle over Sigma_" + w.genus.str() + " with Euler number " + w.euler_number.str();
      break;
    case CoverKind::ConnectedSum:
      what = w.rank == 0 ? std::string("S^3") : "#_" + w.rank.str() + "(S^2 x S^1)";
      break;
  }
  return what + ", degree " + w.degree.str() + " (" + std::string(to_string(w.status)) + ")";
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

namespace {

std::vector<std::int64_t> twos(std::size_t n) { return std::vector<std::int64_t>(n, 2); }

Word letter(int k) { return Word({k}); }

Word power(const Word& w, std::int64_t e) {
  Word out;
  const Word step = e >= 0 ? w : w.inverse();
  for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) out = out * step;
  return out;
}

// Generators a_1, b_1, ..., a_g, b_g, t of pi_1 of a circle bundle over
// Sigma_g with Euler number e (e = 0: the product). Relators: the surface
// relator times t^-e, and t central.
std::pair<std::vector<std::string>, std::vector<Word>> surface_bundle_presentation(std::int64_t g, std::int64_t e) {
  std::vector<std::string> names;
  for (std::int64_t i = 1; i <= g; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  names.push_back("t");
  const int t = static_cast<int>(2 * g + 1);
  std::vector<Word> relators;
  Word surface;
  for (std::int64_t i = 0; i < g; ++i) {
    surface = surface * commutator(letter(static_cast<int>(2 * i + 1)), letter(static_cast<int>(2 * i + 2)));
  }
  Word top = surface * power(letter(t), -e);
  if (!top.empty()) relators.push_back(top);
  for (int k = 1; k < t; ++k) relators.push_back(commutator(letter(k), letter(t)));
  return {names, relators};
}

// a_i -> x_i, b_i -> 1, t -> 1: onto F_g since b_i and the central fibre die.
std::vector<Word> standard_free_images(std::int64_t g) {
  std::vector<Word> images;
  for (std::int64_t i = 1; i <= g; ++i) {
    images.push_back(letter(static_cast<int>(i)));
    images.push_back(Word{});
  }
  images.push_back(Word{});
  return images;
}

Pi1Data bundle_pi1(std::int64_t genus, std::int64_t euler, std::vector<Word> images, int target_rank) {
  auto [names, relators] = surface_bundle_presentation(genus, euler);
  return Pi1Data{std::move(names), std::move(relators), std::move(images), target_rank};
}

SubgroupGraph cyclic_cover_graph(std::int64_t sheets) {
  const auto n = static_cast<std::size_t>(sheets);
  std::vector<std::size_t> shift(n), fixed(n);
  for (std::size_t i = 0; i < n; ++i) {
    shift[i] = (i + 1) % n;
    fixed[i] = i;
  }
  return permutation_graph({shift, fixed});
}

SliceCheck pillowcase_slice(std::string description) {
  return SliceCheck{std::move(description), 1, 0, 2, twos(4)};
}

void require_non_negative(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("schema parameter must be non-negative");
}

}  // namespace

BranchedCoverSchema pillowcase_schema() {
  BranchedCoverSchema s;
  s.construction = "pillowcase";
  s.dimension = 2;
  s.source = {SourceKind::Surface, 1, 0};
  s.degree = 2;
  s.branch_components = 4;
  s.local_degrees = twos(4);
  s.branch_rule = BranchLocusRule::SlicePoints;
  s.slice_check = pillowcase_slice("T^2 -> S^2, quotient by the involution -I");
  s.notes.push_back("target is S^2");
  return s;
}

BranchedCoverSchema product_branched_cover_schema(std::int64_t n) {
  require_non_negative(n);
  BranchedCoverSchema s;
  s.construction = "product";
  s.parameter = n;
  s.source = {SourceKind::Product, n, 0};
  s.target = connected_sum_of_s2xs1(n);
  s.degree = 2;

  if (n == 0) {
    s.branch_components = 2;
    s.local_degrees = twos(2);
    s.branch_rule = BranchLocusRule::SlicePoints;
    s.slice_check = SliceCheck{"S^2 -> S^2, z -> z^2", 0, 0, 2, twos(2)};
    s.pi1_data = Pi1Data{{"t"}, {}, {Word{}}, 0};
    s.notes.push_back("S^2 x S^1 is the double cover of S^3 branched over the two-component unlink");
    s.notes.push_back("S^3 itself is handled by the inessential clause with a rank-0 free cover");
    return s;
  }
  if (n == 1) {
    s.branch_components = 4;
    s.local_degrees = twos(4);
    s.branch_rule = BranchLocusRule::SlicePoints;
    s.slice_check = pillowcase_slice("T^2 -> S^2 pillowcase, times the identity of S^1");
    std::vector<Word> images{Word{}, Word{}, letter(1)};
    s.pi1_data = bundle_pi1(1, 0, std::move(images), 1);
    return s;
  }

  if (n == 2) {
    const std::int64_t circles = arc_gluing_oracle(2, 2);
    s.branch_components = circles;
    s.local_degrees = twos(static_cast<std::size_t>(circles));
    s.branch_rule = BranchLocusRule::SlicePoints;
    s.slice_check = SliceCheck{"double of the pillowcase cut along a disk with two branch points", 2, 0, 2,
                               twos(static_cast<std::size_t>(circles))};
    s.pi1_data = bundle_pi1(2, 0, standard_free_images(2), 2);
    return s;
  }

  // Fibre product of the n = 2 cover with the (n-1)-sheeted unramified cover
  // #_n -> #_2.
  s.branch_rule = BranchLocusRule::Undetermined;
  s.slice_check = SliceCheck{"n = 2 stage: double of the cut pillowcase", 2, 0, 2,
                             twos(static_cast<std::size_t>(arc_gluing_oracle(2, 2)))};
  UnramifiedStage stage;
  stage.degree = n - 1;
  stage.source_genus = n;
  stage.target_genus = 2;
  stage.target_free_rank = 2;
  if (n <= kExplicitDataLimit) {
    stage.cover_graph = cyclic_cover_graph(n - 1);
    s.pi1_data = bundle_pi1(n, 0, standard_free_images(n), static_cast<int>(n));
  } else {
    s.notes.push_back("explicit cover graph and pi_1 images omitted above " + std::to_string(kExplicitDataLimit) +
                      " summands");
  }
  s.unramified_stage = std::move(stage);
  s.notes.push_back("branch circles lift through an unramified cover; their count is not claimed");
  return s;
}

BranchedCoverSchema bundle_branched_cover_schema(std::int64_t n) {
  require_non_negative(n);
  BranchedCoverSchema s;
  s.construction = "circle_bundle";
  s.parameter = n;
  s.target = connected_sum_of_s2xs1(n);
  s.degree = 2;

  if (n == 0) {
    PullbackRecord pullback{2, 2, 1, 2};
    s.source = {SourceKind::CircleBundle, 0, pullback.pulled_back_euler_number};
    s.pullback = pullback;
    s.branch_components = 2;
    s.local_degrees = twos(2);
    s.branch_rule = BranchLocusRule::SlicePoints;
    s.slice_check = SliceCheck{"S^2 -> S^2 branched double cover of the Hopf base", 0, 0, 2, twos(2)};
    s.pi1_data = Pi1Data{{"t"}, {power(letter(1), 2)}, {Word{}}, 0};
    s.notes.push_back("Hopf fibration S^3 -> S^2 pulled back along a degree-2 branched cover of S^2");
    return s;
  }

  MonodromyData monodromy;
  s.monodromy = monodromy;
  if (n == 1) {
    s.source = {SourceKind::CircleBundle, 1, 1};
    const std::int64_t circles = fixed_point_orbits(monodromy.matrix);
    s.branch_components = circles;
    s.local_degrees = twos(static_cast<std::size_t>(circles));
    s.branch_rule = BranchLocusRule::MonodromyOrbits;
    s.slice_check = pillowcase_slice("every torus fibre of the mapping torus maps by the pillowcase");
    // Mapping torus presentation <x, y, s | [x,y], s x S = x, s y S = x y>.
    const Word x = letter(1), y = letter(2), t = letter(3);
    s.pi1_data = Pi1Data{{"x", "y", "s"},
                         {commutator(x, y), t * x * t.inverse() * x.inverse(),
                          t * y * t.inverse() * (x * y).inverse()},
                         {Word{}, Word{}, letter(1)},
                         1};
    return s;
  }

  s.source = {SourceKind::CircleBundle, n, n};
  FiberSumRecord sum;
  sum.summand_euler_numbers.assign(static_cast<std::size_t>(n), 1);
  sum.summand_base_genera.assign(static_cast<std::size_t>(n), 1);
  sum.total_euler_number = n;
  sum.total_base_genus = n;
  s.fiber_sum = std::move(sum);
  s.branch_rule = BranchLocusRule::Undetermined;
  s.slice_check = pillowcase_slice("torus fibres of each fibre-summed mapping torus map by the pillowcase");
  if (n <= kExplicitDataLimit) {
    s.pi1_data = bundle_pi1(n, n, standard_free_images(n), static_cast<int>(n));
  } else {
    s.notes.push_back("pi_1 images omitted above " + std::to_string(kExplicitDataLimit) + " summands");
  }
  s.notes.push_back("fibre sum of " + std::to_string(n) + " copies of the Euler number 1 bundle over T^2");
  return s;
}

namespace {

class Checker {
 public:
  void add(std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  }
  VerificationReport report;
};

std::string eq_detail(std::int64_t lhs, std::int64_t rhs) {
  return std::to_string(lhs) + (lhs == rhs ? " = " : " != ") + std::to_string(rhs);
}

bool all_pieces_s2xs1(const Manifold& m) {
  return std::all_of(m.pieces().begin(), m.pieces().end(),
                     [](const PrimePiece& p) { return std::holds_alternative<S2xS1Piece>(p); });
}

void check_riemann_hurwitz(const BranchedCoverSchema& s, Checker& c) {
  const auto& slice = s.slice_check;
  const std::int64_t chi_source = 2 - 2 * slice.source_genus;
  const std::int64_t chi_target = 2 - 2 * slice.target_genus;
  std::int64_t ramification = 0;
  for (auto d : slice.local_degrees) ramification += d - 1;
  const std::int64_t rhs = slice.degree * chi_target - ramification;
  c.add("riemann_hurwitz", chi_source == rhs && slice.degree == s.degree,
        std::to_string(chi_source) + (chi_source == rhs ? " = " : " != ") + std::to_string(slice.degree) + "*" +
            std::to_string(chi_target) + " - " + std::to_string(ramification) + " (" + slice.description + ")");
}

void check_local_degrees(const BranchedCoverSchema& s, Checker& c) {
  auto ok = [&](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [&](std::int64_t d) { return d == s.degree; });
  };
  c.add("local_degrees", ok(s.local_degrees) && ok(s.slice_check.local_degrees),
        "every branching index equals the covering degree " + std::to_string(s.degree));
}

void check_branch_locus(const BranchedCoverSchema& s, Checker& c) {
  switch (s.branch_rule) {
    case BranchLocusRule::SlicePoints: {
      const auto expected = static_cast<std::int64_t>(s.slice_check.local_degrees.size());
      const bool ok = s.branch_components && *s.branch_components == expected &&
                      static_cast<std::int64_t>(s.local_degrees.size()) == expected;
      c.add("branch_locus", ok,
            "components " + (s.branch_components ? std::to_string(*s.branch_components) : std::string("undetermined")) +
                ", slice branch points " + std::to_string(expected) + ", local degrees listed " +
                std::to_string(s.local_degrees.size()));
      break;
    }
    case BranchLocusRule::MonodromyOrbits: {
      if (!s.monodromy) {
        c.add("branch_locus", false, "monodromy orbit rule without monodromy data");
        break;
      }
      const std::int64_t expected = fixed_point_orbits(s.monodromy->matrix);
      const bool ok = s.branch_components && *s.branch_components == expected &&
                      static_cast<std::int64_t>(s.local_degrees.size()) == expected;
      c.add("branch_locus", ok,
            "components " + (s.branch_components ? std::to_string(*s.branch_components) : std::string("undetermined")) +
                ", monodromy orbits on fixed points of -I " + std::to_string(expected));
      break;
    }
    case BranchLocusRule::Undetermined:
      c.add("branch_locus", !s.branch_components && s.local_degrees.empty(),
            "branch component count not claimed");
      break;
  }
}

void check_shape(const BranchedCoverSchema& s, Checker& c) {
  if (s.dimension == 2) {
    c.add("shape", s.source.kind == SourceKind::Surface && s.target.empty(),
          "surface source " + to_string(s.source) + " over S^2");
    return;
  }
  const auto n = static_cast<std::int64_t>(s.target.size());
  bool ok = s.dimension == 3 && all_pieces_s2xs1(s.target);
  std::string detail = "target " + to_string(s.target) + ", source " + to_string(s.source);
  if (s.construction == "product") {
    ok = ok && s.source.kind == SourceKind::Product && s.source.genus == n && s.source.euler_number == 0;
  } else if (s.construction == "circle_bundle") {
    ok = ok && s.source.kind == SourceKind::CircleBundle && s.source.euler_number != 0;
    if (n >= 1) ok = ok && s.source.genus == n && s.source.euler_number == n;
  } else {
    ok = false;
    detail += ", unknown construction '" + s.construction + "'";
  }
  c.add("shape", ok, detail);
}

void check_monodromy(const BranchedCoverSchema& s, Checker& c) {
  if (!s.monodromy) return;
  const auto& m = *s.monodromy;
  const Matrix2 minus_identity{{{-1, 0}, {0, -1}}};
  const bool det_ok = determinant(m.matrix) == 1;
  c.add("monodromy_determinant", det_ok, "det = " + std::to_string(determinant(m.matrix)));
  const bool commutes = multiply(m.matrix, m.involution) == multiply(m.involution, m.matrix);
  c.add("monodromy_commutes_with_involution", commutes && m.involution == minus_identity,
        commutes ? "phi * iota = iota * phi" : "phi * iota != iota * phi");
  if (s.construction == "circle_bundle" && s.parameter == 1) {
    // The mapping torus of [[1,k],[0,1]] is the circle bundle over T^2 with
    // Euler number k (up to orientation).
    const bool unipotent = m.matrix[0][0] == 1 && m.matrix[1][0] == 0 && m.matrix[1][1] == 1;
    const std::int64_t k = m.matrix[0][1];
    c.add("mapping_torus_euler", unipotent && s.source.genus == 1 && (k == s.source.euler_number),
          "shear " + std::to_string(k) + ", source Euler number " + std::to_string(s.source.euler_number));
  }
}

void check_fiber_sum(const BranchedCoverSchema& s, Checker& c) {
  if (!s.fiber_sum) return;
  const auto& f = *s.fiber_sum;
  const std::int64_t e = std::accumulate(f.summand_euler_numbers.begin(), f.summand_euler_numbers.end(), std::int64_t{0});
  const std::int64_t g = std::accumulate(f.summand_base_genera.begin(), f.summand_base_genera.end(), std::int64_t{0});
  c.add("fiber_sum_euler_additivity", e == f.total_euler_number && f.total_euler_number == s.source.euler_number,
        "sum " + eq_detail(e, f.total_euler_number) + ", source " + std::to_string(s.source.euler_number));
  c.add("fiber_sum_genus_additivity",
        g == f.total_base_genus && f.total_base_genus == s.source.genus &&
            f.summand_euler_numbers.size() == f.summand_base_genera.size() &&
            static_cast<std::int64_t>(f.summand_base_genera.size()) == static_cast<std::int64_t>(s.target.size()),
        "sum " + eq_detail(g, f.total_base_genus) + ", " + std::to_string(f.summand_base_genera.size()) +
            " summands for " + std::to_string(s.target.size()) + " target summands");
}

void check_unramified(const BranchedCoverSchema& s, Checker& c) {
  if (!s.unramified_stage) return;
  const auto& u = *s.unramified_stage;
  const std::int64_t chi_source = 2 - 2 * u.source_genus;
  const std::int64_t chi_target = 2 - 2 * u.target_genus;
  c.add("chi_multiplicativity",
        chi_source == u.degree * chi_target && u.source_genus == s.source.genus &&
            u.target_genus == s.slice_check.source_genus,
        std::to_string(chi_source) + (chi_source == u.degree * chi_target ? " = " : " != ") +
            std::to_string(u.degree) + "*" + std::to_string(chi_target));
  const std::int64_t rank = nielsen_schreier_rank(u.target_free_rank, u.degree);
  c.add("nielsen_schreier", rank == static_cast<std::int64_t>(s.target.size()),
        "index " + std::to_string(u.degree) + " in F_" + std::to_string(u.target_free_rank) + " has rank " +
            eq_detail(rank, static_cast<std::int64_t>(s.target.size())));
  if (u.cover_graph) {
    const auto index = subgroup_index(*u.cover_graph);
    const bool ok = u.cover_graph->is_folded() && index && *index == u.degree &&
                    graph_rank(*u.cover_graph) == rank && u.cover_graph->rank() == u.target_free_rank;
    c.add("cover_graph", ok,
          "index " + (index ? std::to_string(*index) : std::string("infinite")) + ", rank " +
              std::to_string(graph_rank(*u.cover_graph)));
  }
}

void check_pullback(const BranchedCoverSchema& s, Checker& c) {
  if (!s.pullback) return;
  const auto& p = *s.pullback;
  c.add("pullback_degree", p.total_space_degree == p.base_map_degree && p.total_space_degree == s.degree,
        "total space " + eq_detail(p.total_space_degree, p.base_map_degree) + " (base)");
  c.add("pullback_euler",
        p.pulled_back_euler_number == p.base_map_degree * p.base_euler_number &&
            p.pulled_back_euler_number == s.source.euler_number,
        std::to_string(p.pulled_back_euler_number) + " vs " + std::to_string(p.base_map_degree) + "*" +
            std::to_string(p.base_euler_number));
}

void check_pi1(const BranchedCoverSchema& s, Checker& c) {
  if (s.dimension != 3) return;
  if (!s.pi1_data) {
    if (s.target.size() <= 2) c.add("pi1_present", false, "pi_1 images are required for n <= 2");
    return;
  }
  const auto& p = *s.pi1_data;
  const auto n = static_cast<int>(s.target.size());
  bool shape_ok = p.images.size() == p.source_generators.size() && p.target_rank == n;
  for (const auto& w : p.images) shape_ok = shape_ok && w.max_generator() <= p.target_rank;
  for (const auto& r : p.source_relators) {
    shape_ok = shape_ok && r.max_generator() <= static_cast<int>(p.source_generators.size());
  }
  c.add("pi1_shape", shape_ok,
        std::to_string(p.images.size()) + " images for " + std::to_string(p.source_generators.size()) +
            " generators, target rank " + std::to_string(p.target_rank));
  if (!shape_ok) return;

  std::size_t broken = 0;
  for (const auto& r : p.source_relators) broken += substitute(r, p.images).empty() ? 0 : 1;
  c.add("pi1_homomorphism", broken == 0,
        std::to_string(p.source_relators.size() - broken) + "/" + std::to_string(p.source_relators.size()) +
            " relators map to the identity");

  if (p.target_rank == 0) {
    c.add("pi1_surjective", true, "target group is trivial");
    return;
  }
  const auto graph = stallings_fold(p.images, p.target_rank);
  const auto index = subgroup_index(graph);
  c.add("pi1_surjective", index && *index == 1,
        "folded image has " + (index ? "index " + std::to_string(*index) : std::string("infinite index")));
}

}  // namespace

VerificationReport verify_schema(const BranchedCoverSchema& s) {
  Checker c;
  c.add("double_cover", s.degree == 2, "degree " + std::to_string(s.degree));
  check_shape(s, c);
  check_riemann_hurwitz(s, c);
  check_local_degrees(s, c);
  check_branch_locus(s, c);
  check_monodromy(s, c);
  check_fiber_sum(s, c);
  check_unramified(s, c);
  check_pullback(s, c);
  check_pi1(s, c);
  return std::move(c.report);
}

std::int64_t arc_gluing_oracle(std::int64_t branch_points_in_disk, std::int64_t copies) {
  if (copies != 2 || (branch_points_in_disk != 0 && branch_points_in_disk != 2)) {
    throw std::invalid_argument("arc gluing is only defined for 0 or 2 branch points in the disk and 2 copies");
  }
  constexpr std::int64_t kBranchPoints = 4;  // pillowcase

  // Nodes: one per untouched circle, two endpoints per cut arc. Edges join the
  // two endpoints of an arc, and doubling joins each endpoint to its twin in
  // the other copy.
  struct Node {
    std::int64_t copy, point, end;
  };
  std::vector<Node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> joins;
  for (std::int64_t copy = 0; copy < copies; ++copy) {
    for (std::int64_t p = 0; p < kBranchPoints; ++p) {
      if (p < branch_points_in_disk) {
        nodes.push_back({copy, p, 0});
        nodes.push_back({copy, p, 1});
        joins.push_back({nodes.size() - 2, nodes.size() - 1});
      } else {
        nodes.push_back({copy, p, -1});
      }
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].end >= 0 && nodes[i].point == nodes[j].point && nodes[i].end == nodes[j].end &&
          nodes[i].copy != nodes[j].copy) {
        joins.push_back({i, j});
      }
    }
  }
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::int64_t components = static_cast<std::int64_t>(nodes.size());
  for (auto [a, b] : joins) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[b] = a;
      --components;
    }
  }
  return components;
}

}  // namespace domination
