#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "domination/decision.hpp"
#include "domination/sweep.hpp"

namespace domination {

constexpr int kReportSchemaVersion = 1;

/// One query answered for one input. `checks` holds the verification of the
/// attached branched-cover schema, when there is one.
struct Report {
  Query query = Query::Product;
  Manifold input;  // normalized
  Decision decision;
  std::optional<VerificationReport> checks;
};

/// Decides `q` on the normalized input and verifies any attached schema.
Report make_report(Query q, const Manifold& m);

nlohmann::json to_json(const Report& r);
std::string render_text(const Report& r, bool with_witness);

/// One-line verdict, e.g. "YES (seifert.product_cover: ...)".
std::string verdict_line(const Decision& d);

nlohmann::json witness_to_json(const DominationWitness& w);
std::string render_witness(const DominationWitness& w);

nlohmann::json classification_json(const Manifold& normalized);
std::string render_classification(const Manifold& normalized);

nlohmann::json consistency_json(const ConsistencyReport& r);
std::string render_consistency(const ConsistencyReport& r);

nlohmann::json sweep_json(const SweepSummary& s);

}  // namespace domination
