#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "domination/cli.hpp"

using domination::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(DOMINATION_TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("decide answers with exit code 0") {
  auto r = call({"decide", "product", "SFS(g=1;b=0)"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("YES (seifert.product_cover: ", 0) == 0);
  r = call({"decide", "ntbundle", "SFS(g=1;b=0)"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("NO (", 0) == 0);
}

TEST_CASE("rejected input exits with 1") {
  auto r = call({"decide", "product", "SFS(g=1;b=0;(4,2))"});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 1, column") != std::string::npos);
  CHECK(call({"decide", "presentable", "S3"}).code == 1);
  CHECK(call({"decide", "nonsense", "S3"}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({}).code == 1);
  CHECK(call({"classify", "SFS(g=0;b=-1;(2,1),(3,1),(5,1))"}).code == 1);
  CHECK(call({"witness", "anybundle", "S3"}).code == 1);
}

TEST_CASE("json output is deterministic and structured") {
  const auto a = call({"--json", "witness", "product", "Spherical(2) # Spherical(3)"});
  const auto b = call({"witness", "product", "Spherical(2) # Spherical(3)", "--json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["decision"]["verdict"] == true);
  CHECK(j["oracle"]["agree"] == true);

  const auto c = nlohmann::json::parse(call({"--json", "classify", "SFS(g=0;b=1;(2,1),(3,1),(7,1))"}).out);
  CHECK(c.dump().find("-83/42") != std::string::npos);
}

TEST_CASE("oracle bound") {
  const auto r = call({"--max-order", "5", "witness", "product", "Spherical(2) # Spherical(3)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle: skipped") != std::string::npos);
  CHECK(call({"--max-order", "0", "classify", "S3"}).code == 1);
}

TEST_CASE("schema and verify") {
  const auto s = call({"schema", "ntbundle", "2"});
  REQUIRE(s.code == 0);
  const auto good = temp_file("bundle2.json", s.out);
  CHECK(call({"verify", good}).code == 0);

  auto j = nlohmann::json::parse(s.out);
  j["fiber_sum"]["total_euler_number"] = 3;
  const auto bad = temp_file("bundle2_bad.json", j.dump());
  const auto r = call({"verify", bad});
  CHECK(r.code == 2);
  CHECK(r.out.find("[FAIL] fiber_sum_euler_additivity") != std::string::npos);

  CHECK(call({"verify", temp_file("garbage.json", "{not json")}).code == 1);
  CHECK(call({"verify", temp_file("wrong.json", "{\"construction\": 4}")}).code == 1);
  CHECK(call({"verify", "/nonexistent/schema.json"}).code == 1);
  CHECK(call({"schema", "pillowcase"}).code == 0);
}

TEST_CASE("crosscheck") {
  CHECK(call({"crosscheck", "SFS(g=2;b=1) # Spherical(2)"}).code == 0);
  CHECK(call({"crosscheck"}).code == 1);
}

TEST_CASE("corpus") {
  const auto r = call({"corpus"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 mismatches") != std::string::npos);

  const std::string dir = DOMINATION_TEST_TMP_DIR;
  temp_file("mini.txt", "# comment\nSFS(g=1;b=0)\n\nHyperbolic\n");
  temp_file("mini.expected.tsv", "SFS(g=1;b=0)\tYES\tYES\t-\t-\nHyperbolic\tNO\tNO\tNO\tNO\n");
  const auto m = call({"corpus", "--corpus", dir + "/mini.txt"});
  CHECK(m.code == 2);
  CHECK(m.out.find("FAIL SFS(g=1;b=0)") != std::string::npos);

  temp_file("bad.txt", "SFS(g=1\n");
  temp_file("bad.expected.tsv", "");
  CHECK(call({"corpus", "--corpus", dir + "/bad.txt"}).code != 0);
  CHECK(call({"corpus", "--corpus", dir + "/missing.txt"}).code == 1);
}
