#include <doctest.h>

#include "domination/errors.hpp"
#include "domination/schema_json.hpp"
#include "domination/witness.hpp"

using namespace domination;

namespace {

bool check_passed(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c.passed;
  }
  FAIL("missing check " << name);
  return false;
}

bool has_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("pillowcase") {
  const auto s = pillowcase_schema();
  CHECK(s.dimension == 2);
  CHECK(s.slice_check.local_degrees.size() == 4);
  const auto r = verify_schema(s);
  CHECK(r.passed());
  for (const auto& c : r.checks) {
    if (c.name == "riemann_hurwitz") CHECK(c.detail.rfind("0 = 2*2 - 4", 0) == 0);
  }
}

TEST_CASE("monodromy") {
  const MonodromyData m;
  CHECK(determinant(m.matrix) == 1);
  CHECK(multiply(m.matrix, m.involution) == multiply(m.involution, m.matrix));
  CHECK(fixed_point_orbits(m.matrix) == 3);
  CHECK(fixed_point_orbits(Matrix2{{{1, 0}, {0, 1}}}) == 4);
}

TEST_CASE("arc gluing oracle") {
  CHECK(arc_gluing_oracle(2, 2) == 6);
  CHECK(arc_gluing_oracle(0, 2) == 8);
  CHECK_THROWS_AS(arc_gluing_oracle(1, 2), std::invalid_argument);
}

TEST_CASE("schemas verify for n = 0..8") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    CAPTURE(n);
    const auto p = product_branched_cover_schema(n);
    const auto b = bundle_branched_cover_schema(n);
    const auto rp = verify_schema(p);
    const auto rb = verify_schema(b);
    CHECK(rp.passed());
    CHECK(rb.passed());
    CHECK(p.source.genus == n);
    CHECK(b.source.euler_number == (n == 0 ? 2 : n));
    if (n <= 2) {
      CHECK(check_passed(rp, "pi1_surjective"));
      CHECK(check_passed(rb, "pi1_surjective"));
    }
    if (n >= 2) CHECK(check_passed(rb, "fiber_sum_euler_additivity"));
    if (n >= 3) CHECK(check_passed(rp, "chi_multiplicativity"));
  }
  CHECK(product_branched_cover_schema(2).branch_components == 6);
  CHECK(product_branched_cover_schema(1).branch_components == 4);
  CHECK(bundle_branched_cover_schema(1).branch_components == 3);
  CHECK(verify_schema(product_branched_cover_schema(200)).passed());
  CHECK(verify_schema(bundle_branched_cover_schema(200)).passed());
  CHECK_THROWS_AS(product_branched_cover_schema(-1), std::invalid_argument);
}

TEST_CASE("injected faults are caught") {
  SUBCASE("branch count") {
    auto s = product_branched_cover_schema(2);
    s.branch_components = 5;
    CHECK_FALSE(check_passed(verify_schema(s), "branch_locus"));
  }
  SUBCASE("slice points") {
    auto s = product_branched_cover_schema(1);
    s.slice_check.local_degrees.pop_back();
    CHECK_FALSE(check_passed(verify_schema(s), "riemann_hurwitz"));
  }
  SUBCASE("euler sum") {
    auto s = bundle_branched_cover_schema(4);
    s.fiber_sum->total_euler_number = 5;
    CHECK_FALSE(check_passed(verify_schema(s), "fiber_sum_euler_additivity"));
  }
  SUBCASE("monodromy orbit count") {
    auto s = bundle_branched_cover_schema(1);
    s.branch_components = 4;
    CHECK_FALSE(verify_schema(s).passed());
  }
  SUBCASE("monodromy determinant") {
    auto s = bundle_branched_cover_schema(1);
    s.monodromy->matrix = Matrix2{{{1, 1}, {1, 1}}};
    CHECK_FALSE(check_passed(verify_schema(s), "monodromy_determinant"));
  }
  SUBCASE("unramified stage") {
    auto s = product_branched_cover_schema(5);
    s.unramified_stage->source_genus += 1;
    CHECK_FALSE(check_passed(verify_schema(s), "chi_multiplicativity"));
  }
  SUBCASE("non-surjective pi_1 images") {
    auto s = product_branched_cover_schema(2);
    s.pi1_data->images[0] = parse_word("aa");
    const auto r = verify_schema(s);
    CHECK_FALSE(check_passed(r, "pi1_surjective"));
    CHECK_FALSE(r.passed());
  }
  SUBCASE("images violating a relator") {
    auto s = bundle_branched_cover_schema(2);
    s.pi1_data->images.back() = parse_word("a");
    CHECK_FALSE(check_passed(verify_schema(s), "pi1_homomorphism"));
  }
  SUBCASE("missing pi_1 data for small n") {
    auto s = bundle_branched_cover_schema(1);
    s.pi1_data.reset();
    CHECK_FALSE(check_passed(verify_schema(s), "pi1_present"));
  }
  SUBCASE("pullback") {
    auto s = bundle_branched_cover_schema(0);
    s.pullback->pulled_back_euler_number = 3;
    CHECK_FALSE(check_passed(verify_schema(s), "pullback_euler"));
  }
  SUBCASE("undetermined count must stay empty") {
    auto s = bundle_branched_cover_schema(3);
    CHECK(s.branch_rule == BranchLocusRule::Undetermined);
    s.branch_components = 7;
    CHECK_FALSE(verify_schema(s).passed());
  }
}

TEST_CASE("schema JSON round trip") {
  for (std::int64_t n : {0, 1, 2, 3, 6}) {
    for (const auto& s : {product_branched_cover_schema(n), bundle_branched_cover_schema(n)}) {
      const auto j = schema_to_json(s);
      const auto back = schema_from_json(j);
      CHECK(schema_to_json(back) == j);
      CHECK(verify_schema(back).passed());
    }
  }
  CHECK_THROWS_AS(schema_from_json(nlohmann::json{{"construction", 3}}), InputError);
  CHECK(has_check(verify_schema(pillowcase_schema()), "riemann_hurwitz"));
}
