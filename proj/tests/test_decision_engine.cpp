#include <doctest.h>

#include "domination/decision.hpp"
#include "domination/errors.hpp"
#include "domination/parser.hpp"
#include "domination/sweep.hpp"

using namespace domination;

namespace {

Decision product(const char* desc) { return dominated_by_product(parse_manifold(desc)); }
Decision bundle(const char* desc) { return dominated_by_nontrivial_circle_bundle(parse_manifold(desc)); }
Decision presentable(const char* desc) { return presentable_by_products(parse_manifold(desc)); }

}  // namespace

TEST_CASE("product domination") {
  CHECK(product("SFS(g=1;b=0)").verdict);
  CHECK(product("SFS(g=1;b=0)").clause == "seifert.product_cover");
  CHECK(product("SFS(g=2;b=0)").verdict);
  CHECK_FALSE(product("SFS(g=1;b=-1)").verdict);
  CHECK(product("SFS(g=1;b=-1)").clause == "blocked.nonzero_euler_number");
  CHECK_FALSE(product("Hyperbolic").verdict);
  CHECK(product("Hyperbolic").clause == "blocked.not_seifert");
  CHECK(product("S3").verdict);
  CHECK(product("S3").clause == "inessential.free_cover");
  CHECK_FALSE(product("SFS(g=2;b=0) # Spherical(3)").verdict);
  CHECK(product("SFS(g=2;b=0) # Spherical(3)").clause == "blocked.free_indecomposability");
}

TEST_CASE("circle bundle domination") {
  CHECK_FALSE(bundle("SFS(g=1;b=0)").verdict);
  CHECK(bundle("SFS(g=1;b=0)").clause == "blocked.zero_euler_number");
  CHECK(bundle("SFS(g=2;b=1)").verdict);
  CHECK(bundle("SFS(g=2;b=1)").clause == "seifert.nontrivial_bundle_cover");
  CHECK(bundle("S2xS1 # Spherical(2)").verdict);
  CHECK_FALSE(bundle("Sol").verdict);
}

TEST_CASE("finite cover witnesses") {
  SUBCASE("Heisenberg manifold is its own bundle cover") {
    const auto c = seifert_finite_cover(SeifertData{1, -1, {}});
    CHECK(c.degree == 1);
    CHECK(c.base_genus == 1);
    CHECK(c.euler_number == 1);
  }
  SUBCASE("orbifold (2,3,7)") {
    const auto c = seifert_finite_cover(SeifertData{0, -1, {{2, 1}, {3, 1}, {7, 1}}});
    CHECK(c.degree == 84);
    CHECK(c.base_genus == 2);
    CHECK(c.euler_number == 2);
  }
  SUBCASE("four cone points of order 2") {
    const auto c = seifert_finite_cover(SeifertData{0, -2, {{2, 1}, {2, 1}, {2, 1}, {2, 1}}});
    CHECK(c.degree == 2);
    CHECK(c.base_genus == 1);
    CHECK(c.euler_number == 0);
  }
  SUBCASE("inessential witness is an explicit connected sum cover") {
    const Decision d = product("Spherical(2) # Spherical(2)");
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->finite_cover.kind == CoverKind::ConnectedSum);
    CHECK(d.witness->finite_cover.rank == 1);
    CHECK(d.witness->finite_cover.degree == 4);
    REQUIRE(d.witness->branched_cover.has_value());
    CHECK(d.witness->branched_cover->parameter == 1);
  }
  CHECK_FALSE(product("Hyperbolic").witness.has_value());
}

TEST_CASE("presentability") {
  CHECK(presentable("SFS(g=1;b=-1)").verdict);
  CHECK(presentable("SFS(g=2;b=1)").verdict);
  CHECK(presentable("S2xS1").verdict);
  CHECK(presentable("Spherical(2) # Spherical(2)").verdict);
  CHECK(presentable("Spherical(2) # Spherical(2)").clause == "presentable.z2_free_z2");
  CHECK_FALSE(presentable("Spherical(2) # Spherical(3)").verdict);
  CHECK_FALSE(presentable("Hyperbolic").verdict);
  CHECK_FALSE(presentable("S2xS1 # S2xS1").verdict);
  CHECK_THROWS_AS(presentable("S3"), FiniteGroupError);
  CHECK_THROWS_AS(presentable("Spherical(7)"), FiniteGroupError);
}

TEST_CASE("queries normalize first") {
  CHECK(product("SFS(g=1;b=3;(2,-6))").verdict);
  CHECK_THROWS_AS(product("SFS(g=0;b=-1;(2,1),(3,1),(5,1))"), NormalizationError);
  CHECK(parse_query("ntbundle") == Query::NontrivialBundle);
  CHECK_FALSE(parse_query("bogus").has_value());
}

TEST_CASE("algebraic characterization") {
  CHECK(std::holds_alternative<VirtuallyFree>(algebraic_characterization(parse_manifold("Spherical(2)"))));
  CHECK(std::holds_alternative<VirtuallyProductFxZ>(algebraic_characterization(parse_manifold("SFS(g=1;b=0)"))));
  CHECK(std::holds_alternative<CentralExtension>(algebraic_characterization(parse_manifold("SFS(g=1;b=-1)"))));
  CHECK(std::holds_alternative<NoCharacterization>(algebraic_characterization(parse_manifold("Sol"))));
}

TEST_CASE("the three paths agree and the bundle disjunction holds on the sweep") {
  const auto inputs = sweep_inputs();
  CHECK(inputs.size() > 2000);
  const auto summary = run_sweep(inputs, 4);
  CHECK(summary.inputs == inputs.size());
  CHECK(summary.discrepancies.empty());
  CHECK(run_sweep(inputs, 1).discrepancies.size() == summary.discrepancies.size());
  for (const Manifold& m : inputs) {
    const bool any = dominated_by_any_circle_bundle(m).verdict;
    REQUIRE(any == (dominated_by_product(m).verdict || dominated_by_nontrivial_circle_bundle(m).verdict));
  }
}
