#include "domination/report.hpp"

#include <sstream>

#include "domination/schema_json.hpp"

namespace domination {

using nlohmann::json;

namespace {

std::string_view cover_kind_name(CoverKind k) {
  switch (k) {
    case CoverKind::Product: return "product";
    case CoverKind::CircleBundle: return "circle_bundle";
    case CoverKind::ConnectedSum: return "connected_sum";
  }
  return "?";
}

json finite_cover_json(const FiniteCoverWitness& w) {
  json j{{"kind", cover_kind_name(w.kind)},
         {"degree", w.degree.str()},
         {"construction_status", to_string(w.status)},
         {"description", describe(w)},
         {"note", w.note}};
  if (w.kind == CoverKind::ConnectedSum) {
    j["rank"] = w.rank.str();
  } else {
    j["genus"] = w.genus.str();
    j["euler_number"] = w.euler_number.str();
  }
  return j;
}

json path_json(const PathVerdicts& p) {
  return {{"product", p.product},
          {"ntbundle", p.nontrivial_bundle},
          {"product_clause", p.product_clause},
          {"ntbundle_clause", p.bundle_clause}};
}

const char* yes_no(bool b) { return b ? "YES" : "NO"; }

}  // namespace

Report make_report(Query q, const Manifold& m) {
  Report r;
  r.query = q;
  r.input = normalize_manifold(m);
  r.decision = decide(q, r.input);
  if (r.decision.witness && r.decision.witness->branched_cover) {
    r.checks = verify_schema(*r.decision.witness->branched_cover);
  }
  return r;
}

json witness_to_json(const DominationWitness& w) {
  json j{{"finite_cover", finite_cover_json(w.finite_cover)}};
  j["branched_cover"] = w.branched_cover ? schema_to_json(*w.branched_cover) : json(nullptr);
  return j;
}

std::string render_witness(const DominationWitness& w) {
  std::ostringstream out;
  out << "finite cover: " << describe(w.finite_cover) << "\n";
  if (!w.finite_cover.note.empty()) out << "  note: " << w.finite_cover.note << "\n";
  if (const auto& s = w.branched_cover) {
    out << "branched cover: " << to_string(s->source) << " -> " << to_string(s->target) << ", degree " << s->degree
        << ", branch components "
        << (s->branch_components ? std::to_string(*s->branch_components) : std::string("undetermined")) << "\n";
    out << "  slice: " << s->slice_check.description << "\n";
    if (s->pi1_data) {
      out << "  pi_1 images:";
      for (std::size_t i = 0; i < s->pi1_data->images.size(); ++i) {
        out << " " << s->pi1_data->source_generators[i] << "->" << to_string(s->pi1_data->images[i]);
      }
      out << "\n";
    }
    for (const auto& note : s->notes) out << "  note: " << note << "\n";
  }
  return out.str();
}

std::string verdict_line(const Decision& d) {
  return std::string(yes_no(d.verdict)) + " (" + d.clause + ": " + d.explanation + ")";
}

json to_json(const Report& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["query"] = to_string(r.query);
  j["input"] = to_string(r.input);
  j["decision"] = {{"verdict", r.decision.verdict}, {"clause", r.decision.clause}, {"explanation", r.decision.explanation}};
  j["witness_detail"] = r.decision.witness ? witness_to_json(*r.decision.witness) : json(nullptr);
  j["checks"] = r.checks ? report_to_json(*r.checks) : json(nullptr);
  return j;
}

std::string render_text(const Report& r, bool with_witness) {
  std::ostringstream out;
  out << verdict_line(r.decision) << "\n";
  if (with_witness) {
    out << "input: " << to_string(r.input) << "\n";
    if (r.decision.witness) {
      out << render_witness(*r.decision.witness);
    } else {
      out << "no witness (verdict is NO)\n";
    }
    if (r.checks) {
      out << "checks: " << (r.checks->passed() ? "all passed" : std::to_string(r.checks->failures()) + " failed")
          << "\n";
      for (const auto& c : r.checks->checks) {
        out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
      }
    }
  }
  return out.str();
}

json classification_json(const Manifold& m) {
  json pieces = json::array();
  for (const auto& p : m.pieces()) {
    json entry{{"piece", to_string(p)}, {"geometry", to_string(classify_geometry(p))}, {"aspherical", is_aspherical(p)}};
    if (const auto* s = std::get_if<SeifertData>(&p)) {
      entry["euler_number"] = to_fraction_string(euler_number(*s));
      entry["orbifold_euler_characteristic"] = to_fraction_string(orbifold_euler_characteristic(*s));
    }
    pieces.push_back(std::move(entry));
  }
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = to_string(m);
  j["pieces"] = pieces;
  j["rationally_essential"] = is_rationally_essential(m);
  j["finite_fundamental_group"] = has_finite_fundamental_group(m);
  j["algebraic_characterization"] = to_string(algebraic_characterization(m));
  return j;
}

std::string render_classification(const Manifold& m) {
  std::ostringstream out;
  out << "input: " << to_string(m) << "\n";
  for (const auto& p : m.pieces()) {
    out << "  " << to_string(p) << ": " << to_string(classify_geometry(p));
    if (const auto* s = std::get_if<SeifertData>(&p)) {
      out << " (e = " << to_display_string(euler_number(*s))
          << ", chi_orb = " << to_display_string(orbifold_euler_characteristic(*s)) << ")";
    }
    out << "\n";
  }
  out << "rationally essential: " << (is_rationally_essential(m) ? "yes" : "no") << "\n";
  out << "algebraic characterization: " << to_string(algebraic_characterization(m)) << "\n";
  return out.str();
}

json consistency_json(const ConsistencyReport& r) {
  return {{"schema_version", kReportSchemaVersion},
          {"input", to_string(r.input)},
          {"consistent", r.consistent()},
          {"topological", path_json(r.topological)},
          {"geometric", path_json(r.geometric)},
          {"algebraic", path_json(r.algebraic)}};
}

std::string render_consistency(const ConsistencyReport& r) {
  std::ostringstream out;
  out << "input: " << to_string(r.input) << "\n";
  auto row = [&](const char* name, const PathVerdicts& p) {
    out << "  " << name << ": product " << yes_no(p.product) << " (" << p.product_clause << "), ntbundle "
        << yes_no(p.nontrivial_bundle) << " (" << p.bundle_clause << ")\n";
  };
  row("topological", r.topological);
  row("geometric  ", r.geometric);
  row("algebraic  ", r.algebraic);
  out << (r.consistent() ? "paths agree" : "DISCREPANCY") << "\n";
  return out.str();
}

json sweep_json(const SweepSummary& s) {
  json bad = json::array();
  for (const auto& r : s.discrepancies) bad.push_back(consistency_json(r));
  return {{"schema_version", kReportSchemaVersion},
          {"inputs", s.inputs},
          {"discrepancies", s.discrepancies.size()},
          {"details", bad}};
}

}  // namespace domination
