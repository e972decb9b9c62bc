#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include <sstream>

#include "domination/cli.hpp"
#include "domination/decision.hpp"
#include "domination/errors.hpp"
#include "domination/free_product.hpp"
#include "domination/parser.hpp"
#include "domination/report.hpp"
#include "domination/schema_json.hpp"
#include "domination/witness.hpp"

namespace py = pybind11;
using namespace domination;

namespace {

// Results cross the boundary as JSON text; the Python wrapper decodes them.
std::string decide_json(const std::string& query, const std::string& desc) {
  const auto q = parse_query(query);
  if (!q) throw InputError("unknown query '" + query + "'");
  return to_json(make_report(*q, parse_manifold(desc))).dump();
}

std::string classify_json(const std::string& desc) {
  return classification_json(normalize_manifold(parse_manifold(desc))).dump();
}

std::string crosscheck_json(const std::string& desc) { return consistency_json(cross_check(parse_manifold(desc))).dump(); }

std::string schema_json(const std::string& kind, std::int64_t n) {
  if (kind == "pillowcase") return schema_to_json(pillowcase_schema()).dump();
  if (kind == "product") return schema_to_json(product_branched_cover_schema(n)).dump();
  if (kind == "ntbundle") return schema_to_json(bundle_branched_cover_schema(n)).dump();
  throw InputError("schema kind must be pillowcase, product or ntbundle");
}

std::string verify_json(const std::string& schema) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(schema);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("schema is not valid JSON: ") + e.what());
  }
  return report_to_json(verify_schema(schema_from_json(j))).dump();
}

py::tuple free_cover(std::int64_t free_rank, std::vector<std::int64_t> orders) {
  std::sort(orders.begin(), orders.end());
  const FreeCover c = free_cover_rank(FreeProductData{free_rank, orders});
  return py::make_tuple(py::int_(py::str(c.rank.str())), py::int_(py::str(c.degree.str())));
}

std::int64_t rank_oracle(std::int64_t free_rank, std::vector<std::int64_t> orders, std::int64_t max_order) {
  std::sort(orders.begin(), orders.end());
  return reidemeister_schreier_rank_oracle(FreeProductData{free_rank, orders}, max_order);
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Domination of 3-manifolds by products and circle bundles";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<OracleBoundError>(m, "OracleBoundError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);

  m.def("normalize", [](const std::string& desc) { return to_string(normalize_manifold(parse_manifold(desc))); });
  m.def("decide_json", &decide_json, py::arg("query"), py::arg("description"));
  m.def("classify_json", &classify_json, py::arg("description"));
  m.def("crosscheck_json", &crosscheck_json, py::arg("description"));
  m.def("schema_json", &schema_json, py::arg("kind"), py::arg("n") = 0);
  m.def("verify_json", &verify_json, py::arg("schema"));
  m.def("free_cover_rank", &free_cover, py::arg("free_rank"), py::arg("orders"));
  m.def("rank_oracle", &rank_oracle, py::arg("free_rank"), py::arg("orders"),
        py::arg("max_order") = kDefaultOracleBound);
  m.def("run_cli", &run_cli, py::arg("args"));
}
