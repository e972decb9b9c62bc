#include "domination/schema_json.hpp"

#include "domination/errors.hpp"
#include "domination/parser.hpp"

namespace domination {

using nlohmann::json;

namespace {

json word_to_json(const Word& w) { return json(std::vector<int>(w.letters().begin(), w.letters().end())); }

Word word_from_json(const json& j) { return Word(j.get<std::vector<int>>()); }

std::string_view kind_name(SourceKind k) {
  switch (k) {
    case SourceKind::Surface: return "surface";
    case SourceKind::Product: return "product";
    case SourceKind::CircleBundle: return "circle_bundle";
  }
  return "?";
}

SourceKind kind_from(const std::string& s) {
  if (s == "surface") return SourceKind::Surface;
  if (s == "product") return SourceKind::Product;
  if (s == "circle_bundle") return SourceKind::CircleBundle;
  throw InputError("unknown source kind '" + s + "'");
}

std::string_view rule_name(BranchLocusRule r) {
  switch (r) {
    case BranchLocusRule::SlicePoints: return "slice_points";
    case BranchLocusRule::MonodromyOrbits: return "monodromy_orbits";
    case BranchLocusRule::Undetermined: return "undetermined";
  }
  return "?";
}

BranchLocusRule rule_from(const std::string& s) {
  if (s == "slice_points") return BranchLocusRule::SlicePoints;
  if (s == "monodromy_orbits") return BranchLocusRule::MonodromyOrbits;
  if (s == "undetermined") return BranchLocusRule::Undetermined;
  throw InputError("unknown branch rule '" + s + "'");
}

json graph_to_json(const SubgroupGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.source, e.label, e.target});
  return {{"rank", g.rank()}, {"vertices", g.vertex_count()}, {"edges", edges}};
}

SubgroupGraph graph_from_json(const json& j) {
  std::vector<LabeledEdge> edges;
  for (const auto& e : j.at("edges")) {
    edges.push_back({e.at(0).get<std::size_t>(), e.at(1).get<int>(), e.at(2).get<std::size_t>()});
  }
  return SubgroupGraph(j.at("rank").get<int>(), j.at("vertices").get<std::size_t>(), std::move(edges));
}

}  // namespace

json schema_to_json(const BranchedCoverSchema& s) {
  json j;
  j["construction"] = s.construction;
  j["parameter"] = s.parameter;
  j["dimension"] = s.dimension;
  j["source"] = {{"kind", kind_name(s.source.kind)},
                 {"genus", s.source.genus},
                 {"euler_number", s.source.euler_number},
                 {"description", to_string(s.source)}};
  j["target"] = s.dimension == 3 ? to_string(s.target) : "S2";
  j["degree"] = s.degree;
  j["branch_components"] = s.branch_components ? json(*s.branch_components) : json(nullptr);
  j["local_degrees"] = s.local_degrees;
  j["branch_rule"] = rule_name(s.branch_rule);
  j["slice_check"] = {{"description", s.slice_check.description},
                      {"source_genus", s.slice_check.source_genus},
                      {"target_genus", s.slice_check.target_genus},
                      {"degree", s.slice_check.degree},
                      {"local_degrees", s.slice_check.local_degrees}};
  if (s.monodromy) j["monodromy"] = {{"matrix", s.monodromy->matrix}, {"involution", s.monodromy->involution}};
  if (s.fiber_sum) {
    j["fiber_sum"] = {{"summand_euler_numbers", s.fiber_sum->summand_euler_numbers},
                      {"summand_base_genera", s.fiber_sum->summand_base_genera},
                      {"total_euler_number", s.fiber_sum->total_euler_number},
                      {"total_base_genus", s.fiber_sum->total_base_genus}};
  }
  if (s.unramified_stage) {
    const auto& u = *s.unramified_stage;
    j["unramified_stage"] = {{"degree", u.degree},
                             {"source_genus", u.source_genus},
                             {"target_genus", u.target_genus},
                             {"target_free_rank", u.target_free_rank},
                             {"cover_graph", u.cover_graph ? graph_to_json(*u.cover_graph) : json(nullptr)}};
  }
  if (s.pullback) {
    j["pullback"] = {{"base_map_degree", s.pullback->base_map_degree},
                     {"total_space_degree", s.pullback->total_space_degree},
                     {"base_euler_number", s.pullback->base_euler_number},
                     {"pulled_back_euler_number", s.pullback->pulled_back_euler_number}};
  }
  if (s.pi1_data) {
    json relators = json::array(), images = json::array(), images_text = json::array();
    for (const auto& w : s.pi1_data->source_relators) relators.push_back(word_to_json(w));
    for (const auto& w : s.pi1_data->images) {
      images.push_back(word_to_json(w));
      images_text.push_back(to_string(w));
    }
    j["pi1_data"] = {{"source_generators", s.pi1_data->source_generators},
                     {"source_relators", relators},
                     {"images", images},
                     {"images_text", images_text},
                     {"target_rank", s.pi1_data->target_rank}};
  }
  j["notes"] = s.notes;
  return j;
}

BranchedCoverSchema schema_from_json(const json& j) {
  try {
    BranchedCoverSchema s;
    s.construction = j.at("construction").get<std::string>();
    s.parameter = j.value("parameter", std::int64_t{0});
    s.dimension = j.at("dimension").get<int>();
    const auto& src = j.at("source");
    s.source = {kind_from(src.at("kind").get<std::string>()), src.at("genus").get<std::int64_t>(),
                src.value("euler_number", std::int64_t{0})};
    if (s.dimension == 3) s.target = parse_manifold(j.at("target").get<std::string>());
    s.degree = j.at("degree").get<std::int64_t>();
    if (!j.at("branch_components").is_null()) s.branch_components = j.at("branch_components").get<std::int64_t>();
    s.local_degrees = j.at("local_degrees").get<std::vector<std::int64_t>>();
    s.branch_rule = rule_from(j.at("branch_rule").get<std::string>());
    const auto& sc = j.at("slice_check");
    s.slice_check = {sc.value("description", std::string{}), sc.at("source_genus").get<std::int64_t>(),
                     sc.at("target_genus").get<std::int64_t>(), sc.at("degree").get<std::int64_t>(),
                     sc.at("local_degrees").get<std::vector<std::int64_t>>()};
    if (j.contains("monodromy")) {
      s.monodromy = MonodromyData{j["monodromy"].at("matrix").get<Matrix2>(),
                                  j["monodromy"].at("involution").get<Matrix2>()};
    }
    if (j.contains("fiber_sum")) {
      const auto& f = j["fiber_sum"];
      s.fiber_sum = FiberSumRecord{f.at("summand_euler_numbers").get<std::vector<std::int64_t>>(),
                                   f.at("summand_base_genera").get<std::vector<std::int64_t>>(),
                                   f.at("total_euler_number").get<std::int64_t>(),
                                   f.at("total_base_genus").get<std::int64_t>()};
    }
    if (j.contains("unramified_stage")) {
      const auto& u = j["unramified_stage"];
      UnramifiedStage stage{u.at("degree").get<std::int64_t>(), u.at("source_genus").get<std::int64_t>(),
                            u.at("target_genus").get<std::int64_t>(), u.value("target_free_rank", std::int64_t{2}),
                            std::nullopt};
      if (u.contains("cover_graph") && !u["cover_graph"].is_null()) stage.cover_graph = graph_from_json(u["cover_graph"]);
      s.unramified_stage = std::move(stage);
    }
    if (j.contains("pullback")) {
      const auto& p = j["pullback"];
      s.pullback = PullbackRecord{p.at("base_map_degree").get<std::int64_t>(),
                                  p.at("total_space_degree").get<std::int64_t>(),
                                  p.at("base_euler_number").get<std::int64_t>(),
                                  p.at("pulled_back_euler_number").get<std::int64_t>()};
    }
    if (j.contains("pi1_data")) {
      const auto& p = j["pi1_data"];
      Pi1Data data;
      data.source_generators = p.at("source_generators").get<std::vector<std::string>>();
      for (const auto& w : p.at("source_relators")) data.source_relators.push_back(word_from_json(w));
      for (const auto& w : p.at("images")) data.images.push_back(word_from_json(w));
      data.target_rank = p.at("target_rank").get<int>();
      s.pi1_data = std::move(data);
    }
    if (j.contains("notes")) s.notes = j["notes"].get<std::vector<std::string>>();
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed schema: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed schema: ") + e.what());
  }
}

json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"failures", r.failures()}, {"checks", checks}};
}

}  // namespace domination
