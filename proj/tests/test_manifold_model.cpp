#include <doctest.h>

#include <numeric>
#include <random>

#include "domination/errors.hpp"
#include "domination/manifold.hpp"
#include "domination/parser.hpp"
#include "domination/seifert.hpp"

using namespace domination;

namespace {

SeifertData sfs(std::int64_t g, std::int64_t b, std::vector<ExceptionalFiber> f = {}) {
  return SeifertData{g, b, std::move(f)};
}

}  // namespace

TEST_CASE("rational formatting") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(Rational(-61, 30)) == "-61/30");
  CHECK(to_display_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), InputError);
}

TEST_CASE("euler number and orbifold euler characteristic") {
  const auto s = sfs(0, 1, {{2, 1}, {3, 1}, {5, 1}});
  CHECK(euler_number(s) == Rational(-61, 30));
  CHECK(orbifold_euler_characteristic(s) == Rational(1, 30));

  const auto t = sfs(0, -1, {{2, 1}, {3, 1}, {7, 1}});
  CHECK(euler_number(t) == Rational(1, 42));
  CHECK(orbifold_euler_characteristic(t) == Rational(-1, 42));

  CHECK(euler_number(sfs(1, -1)) == Rational(1));
  CHECK(orbifold_euler_characteristic(sfs(2, 0)) == Rational(-2));
  CHECK(fiber_order_lcm(t) == 42);
}

TEST_CASE("normalize_seifert") {
  SUBCASE("beta reduced into [0, alpha), obstruction absorbs the rest") {
    const auto n = normalize_seifert(sfs(2, 3, {{5, -7}, {3, 2}}));
    CHECK(n == sfs(2, 1, {{3, 2}, {5, 3}}));
    CHECK(euler_number(n) == Rational(-34, 15));
    CHECK(orbifold_euler_characteristic(n) == Rational(-52, 15));
  }
  SUBCASE("beta divisible by alpha drops the fibre") {
    CHECK(normalize_seifert(sfs(0, 0, {{4, 8}, {2, 1}})) == sfs(0, 2, {{2, 1}}));
  }
  SUBCASE("non-coprime pair") { CHECK_THROWS_AS(normalize_seifert(sfs(0, 0, {{4, 2}})), std::invalid_argument); }
  SUBCASE("extreme obstruction") {
    const auto n = normalize_seifert(sfs(0, INT64_MIN + 1, {{2, -1}}));
    CHECK(n == sfs(0, INT64_MIN, {{2, 1}}));
  }
}

TEST_CASE("normalization is idempotent and preserves e and chi_orb") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> genus(0, 3), obstruction(-6, 6), count(0, 4), alpha(2, 9), beta(-20, 20);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    SeifertData s{genus(rng), obstruction(rng), {}};
    const int k = count(rng);
    for (int j = 0; j < k; ++j) {
      const int a = alpha(rng);
      int b = beta(rng);
      while (std::gcd(a, b) != 1) ++b;
      s.fibers.push_back({a, b});
    }
    const auto n = normalize_seifert(s);
    REQUIRE(is_normalized(n));
    REQUIRE(normalize_seifert(n) == n);
    REQUIRE(euler_number(n) == euler_number(s));
    REQUIRE(orbifold_euler_characteristic(n) == orbifold_euler_characteristic(s));
    ++checked;
  }
  CHECK(checked == 3000);
}

TEST_CASE("geometry classification") {
  CHECK(classify_geometry(sfs(1, 0)) == Geometry::E3);
  CHECK(classify_geometry(sfs(2, 0)) == Geometry::H2xR);
  CHECK(classify_geometry(sfs(1, -1)) == Geometry::Nil);
  CHECK(classify_geometry(sfs(2, 1)) == Geometry::SL2Rtilde);
  CHECK(classify_geometry(sfs(0, -1, {{2, 1}, {3, 1}, {7, 1}})) == Geometry::SL2Rtilde);
  CHECK(classify_geometry(sfs(0, -2, {{2, 1}, {2, 1}, {2, 1}, {2, 1}})) == Geometry::E3);
  CHECK(classify_geometry(S2xS1Piece{}) == Geometry::S2xR);
  CHECK(classify_geometry(SphericalPiece{120}) == Geometry::S3geom);
  CHECK(classify_geometry(HyperbolicPiece{}) == Geometry::H3);
  CHECK(classify_geometry(SolPiece{}) == Geometry::SolGeom);
  CHECK(classify_geometry(OtherAsphericalPiece{}) == Geometry::NonGeometric);
  CHECK(to_string(Geometry::SL2Rtilde) == "SL2Rtilde");
}

TEST_CASE("normalize_manifold") {
  SUBCASE("positive chi_orb without fibres and e = 0 is S2xS1") {
    const Manifold m = normalize_manifold(Manifold({sfs(0, 0)}));
    CHECK(m == Manifold({S2xS1Piece{}}));
  }
  SUBCASE("spherical Seifert data is rejected") {
    CHECK_THROWS_AS(normalize_manifold(Manifold({sfs(0, -1, {{2, 1}, {3, 1}, {5, 1}})})), NormalizationError);
    CHECK_THROWS_AS(normalize_manifold(Manifold({sfs(0, 1)})), NormalizationError);
  }
  SUBCASE("pieces are sorted") {
    const Manifold a = normalize_manifold(parse_manifold("Hyperbolic # Spherical(2)"));
    const Manifold b = normalize_manifold(parse_manifold("Spherical(2) # Hyperbolic"));
    CHECK(a == b);
  }
  CHECK(normalize_manifold(Manifold{}).empty());
}

TEST_CASE("essentialness") {
  CHECK_FALSE(is_rationally_essential(parse_manifold("S3")));
  CHECK_FALSE(is_rationally_essential(parse_manifold("S2xS1 # Spherical(5)")));
  CHECK(is_rationally_essential(parse_manifold("Sol # S2xS1")));
  CHECK(has_finite_fundamental_group(parse_manifold("Spherical(120)")));
  CHECK_FALSE(has_finite_fundamental_group(parse_manifold("Spherical(2) # Spherical(2)")));
  CHECK(connected_sum_of_s2xs1(3).size() == 3);
}

TEST_CASE("parser") {
  const Manifold m = parse_manifold("SFS(g=2;b=1;(3,2),(5,3)) # Spherical(2)");
  REQUIRE(m.size() == 2);
  CHECK(to_string(m) == "SFS(g=2;b=1;(3,2),(5,3)) # Spherical(2)");
  CHECK(to_string(parse_manifold("S3")) == "S3");
  CHECK(to_string(parse_manifold("  SFS ( g = 1 ; b = -1 ) ")) == "SFS(g=1;b=-1)");
  CHECK(to_string(parse_manifold("SFS(g=1; b=0)")) == "SFS(g=1;b=0)");
  CHECK(to_string(parse_manifold("Spherical (2)#Spherical( 2 )")) == "Spherical(2) # Spherical(2)");

  auto error_at = [](const char* text) -> std::pair<int, int> {
    try {
      (void)parse_manifold(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("SFS(g=-1;b=0)") == std::pair{1, 7});
  CHECK(error_at("SFS(g=1;b=0;(1,1))").first == 1);
  CHECK(error_at("Spherical(1)").first == 1);
  CHECK(error_at("Hyperbolic #").first == 1);
  CHECK(error_at("").first == 1);
  CHECK(error_at("Hyperbolic\n# Bogus").first == 2);
  CHECK(error_at("SFS(g=1;b=99999999999999999999)").first == 1);
  CHECK_THROWS_AS(parse_manifold("SFS(n=1;b=0)"), ParseError);
  CHECK_THROWS_AS(parse_manifold("SFS(g=0;b=0;(4,2))"), ParseError);
}
