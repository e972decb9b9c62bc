#include "domination/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "domination/decision.hpp"
#include "domination/errors.hpp"
#include "domination/parser.hpp"
#include "domination/report.hpp"
#include "domination/schema_json.hpp"
#include "domination/sweep.hpp"

#ifndef DOMINATION_DEFAULT_CORPUS
#define DOMINATION_DEFAULT_CORPUS "data/corpus.txt"
#endif

namespace domination::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json_output = false;
  std::int64_t max_order = kDefaultOracleBound;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Cross-checks the free-cover rank of an inessential input against the coset
// enumeration. Returns false on disagreement.
bool oracle_check(const Manifold& m, const Options& opt, json& record, std::string& line) {
  const auto d = free_product_data(m);
  if (!d) return true;
  const FreeCover cover = free_cover_rank(*d);
  try {
    const std::int64_t oracle = reidemeister_schreier_rank_oracle(*d, opt.max_order);
    const bool agree = BigInt(oracle) == cover.rank;
    record = {{"rank", cover.rank.str()}, {"oracle_rank", oracle}, {"agree", agree}};
    line = "oracle: coset enumeration over " + cover.degree.str() + " cosets gives rank " + std::to_string(oracle) +
           (agree ? " (agrees)" : " (DISAGREES with " + cover.rank.str() + ")");
    return agree;
  } catch (const OracleBoundError&) {
    record = {{"rank", cover.rank.str()}, {"oracle_rank", nullptr}, {"skipped", "degree exceeds --max-order"}};
    line = "oracle: skipped, " + cover.degree.str() + " cosets exceed --max-order " + std::to_string(opt.max_order);
    return true;
  }
}

int cmd_classify(const std::string& desc, const Options& opt, std::ostream& out) {
  const Manifold m = normalize_manifold(parse_manifold(desc));
  if (opt.json_output) {
    emit(out, classification_json(m));
  } else {
    out << render_classification(m);
  }
  return kExitOk;
}

int cmd_decide(const std::string& query, const std::string& desc, const Options& opt, std::ostream& out,
               std::ostream& err) {
  const auto q = parse_query(query);
  if (!q) {
    err << "unknown query '" << query << "' (expected product, ntbundle, anybundle or presentable)\n";
    return kExitRejected;
  }
  const Report r = make_report(*q, parse_manifold(desc));
  if (opt.json_output) {
    emit(out, to_json(r));
  } else {
    out << render_text(r, false);
  }
  return r.checks && !r.checks->passed() ? kExitInconsistent : kExitOk;
}

int cmd_witness(const std::string& query, const std::string& desc, const Options& opt, std::ostream& out,
                std::ostream& err) {
  Query q;
  if (query == "product") {
    q = Query::Product;
  } else if (query == "ntbundle") {
    q = Query::NontrivialBundle;
  } else {
    err << "witness supports 'product' and 'ntbundle', got '" << query << "'\n";
    return kExitRejected;
  }
  const Report r = make_report(q, parse_manifold(desc));
  json oracle = nullptr;
  std::string oracle_line;
  const bool oracle_ok = !r.decision.verdict || oracle_check(r.input, opt, oracle, oracle_line);
  if (opt.json_output) {
    json j = to_json(r);
    j["oracle"] = oracle;
    emit(out, j);
  } else {
    out << render_text(r, true);
    if (!oracle_line.empty()) out << oracle_line << "\n";
  }
  const bool checks_ok = !r.checks || r.checks->passed();
  return checks_ok && oracle_ok ? kExitOk : kExitInconsistent;
}

int cmd_verify(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open schema file '" << path << "'\n";
    return kExitRejected;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    err << "schema file is not valid JSON: " << e.what() << "\n";
    return kExitRejected;
  }
  // Accept a bare schema or a full witness report.
  if (doc.contains("witness_detail") && doc["witness_detail"].is_object()) {
    doc = doc["witness_detail"].value("branched_cover", json(nullptr));
    if (doc.is_null()) {
      err << "report carries no branched cover schema\n";
      return kExitRejected;
    }
  }
  const BranchedCoverSchema schema = schema_from_json(doc);
  const VerificationReport report = verify_schema(schema);
  if (opt.json_output) {
    json j = report_to_json(report);
    j["schema_version"] = kReportSchemaVersion;
    emit(out, j);
  } else {
    for (const auto& c : report.checks) {
      out << "[" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
    }
    out << (report.passed() ? "schema verified" : std::to_string(report.failures()) + " check(s) failed") << "\n";
  }
  return report.passed() ? kExitOk : kExitInconsistent;
}

int cmd_schema(const std::string& kind, std::int64_t n, std::ostream& out, std::ostream& err) {
  BranchedCoverSchema s;
  if (kind == "pillowcase") {
    s = pillowcase_schema();
  } else if (kind == "product") {
    s = product_branched_cover_schema(n);
  } else if (kind == "ntbundle") {
    s = bundle_branched_cover_schema(n);
  } else {
    err << "schema kind must be pillowcase, product or ntbundle\n";
    return kExitRejected;
  }
  emit(out, schema_to_json(s));
  return kExitOk;
}

int cmd_crosscheck(const std::string& desc, bool sweep, const Options& opt, std::ostream& out, std::ostream& err) {
  if (sweep) {
    const SweepSummary summary = run_sweep(sweep_inputs());
    if (opt.json_output) {
      emit(out, sweep_json(summary));
    } else {
      for (const auto& r : summary.discrepancies) out << render_consistency(r);
      out << "swept " << summary.inputs << " inputs, " << summary.discrepancies.size() << " discrepancies\n";
    }
    return summary.discrepancies.empty() ? kExitOk : kExitInconsistent;
  }
  if (desc.empty()) {
    err << "crosscheck needs a description or --sweep\n";
    return kExitRejected;
  }
  const ConsistencyReport r = cross_check(parse_manifold(desc));
  json oracle = nullptr;
  std::string oracle_line;
  const bool oracle_ok = oracle_check(r.input, opt, oracle, oracle_line);
  if (opt.json_output) {
    json j = consistency_json(r);
    j["oracle"] = oracle;
    emit(out, j);
  } else {
    out << render_consistency(r);
    if (!oracle_line.empty()) out << oracle_line << "\n";
  }
  return r.consistent() && oracle_ok ? kExitOk : kExitInconsistent;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string sidecar_path(const std::string& corpus) {
  const auto dot = corpus.rfind('.');
  const auto slash = corpus.find_last_of('/');
  const std::string stem = (dot == std::string::npos || (slash != std::string::npos && dot < slash))
                               ? corpus
                               : corpus.substr(0, dot);
  return stem + ".expected.tsv";
}

const std::vector<Query> kCorpusQueries{Query::Product, Query::NontrivialBundle, Query::AnyBundle, Query::Presentable};

int cmd_corpus(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream corpus(path);
  if (!corpus) {
    err << "cannot open corpus '" << path << "'\n";
    return kExitRejected;
  }
  const std::string table_path = sidecar_path(path);
  std::ifstream table(table_path);
  if (!table) {
    err << "cannot open expected-verdict table '" << table_path << "'\n";
    return kExitRejected;
  }

  // description -> expected cells (YES / NO / ERR / -), one per query
  std::map<std::string, std::vector<std::string>> expected;
  for (std::string line; std::getline(table, line);) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, '\t');) cells.push_back(trim(cell));
    if (cells.size() != 1 + kCorpusQueries.size()) {
      err << "malformed expected-verdict row: " << line << "\n";
      return kExitRejected;
    }
    expected[cells[0]] = std::vector<std::string>(cells.begin() + 1, cells.end());
  }

  int status = kExitOk;
  std::size_t entries = 0, mismatches = 0;
  json rows = json::array();
  for (std::string line; std::getline(corpus, line);) {
    const std::string desc = trim(line);
    if (desc.empty() || desc[0] == '#') continue;
    ++entries;
    json row{{"description", desc}};
    std::vector<std::string> got;
    try {
      const Manifold m = normalize_manifold(parse_manifold(desc));
      for (Query q : kCorpusQueries) {
        try {
          got.push_back(decide(q, m).verdict ? "YES" : "NO");
        } catch (const FiniteGroupError&) {
          got.push_back("ERR");
        }
      }
      const ConsistencyReport r = cross_check(m);
      row["paths_agree"] = r.consistent();
      if (!r.consistent()) status = kExitInconsistent;
    } catch (const InputError& e) {
      row["error"] = e.what();
      if (status == kExitOk) status = kExitRejected;
      got.assign(kCorpusQueries.size(), "REJECTED");
    }
    const auto it = expected.find(desc);
    bool match = it != expected.end();
    if (match) {
      for (std::size_t i = 0; i < got.size(); ++i) {
        if (it->second[i] != "-" && it->second[i] != got[i]) match = false;
      }
    }
    if (!match) {
      ++mismatches;
      status = kExitInconsistent;
    }
    row["match"] = match;
    row["expected"] = it != expected.end() ? json(it->second) : json(nullptr);
    for (std::size_t i = 0; i < kCorpusQueries.size(); ++i) row[std::string(to_string(kCorpusQueries[i]))] = got[i];
    if (!opt.json_output) {
      out << (match ? "ok   " : "FAIL ") << desc << ":";
      for (std::size_t i = 0; i < kCorpusQueries.size(); ++i) out << " " << to_string(kCorpusQueries[i]) << "=" << got[i];
      if (it == expected.end()) out << " (no expected row)";
      out << "\n";
    }
    rows.push_back(std::move(row));
  }
  if (opt.json_output) {
    emit(out, {{"schema_version", kReportSchemaVersion},
               {"corpus", path},
               {"entries", entries},
               {"mismatches", mismatches},
               {"rows", rows}});
  } else {
    out << entries << " entries, " << mismatches << " mismatches\n";
  }
  return status;
}

}  // namespace

std::string default_corpus_path() { return DOMINATION_DEFAULT_CORPUS; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decides domination of closed oriented 3-manifolds by products and circle bundles", "domination"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "Emit a structured JSON report");
  app.add_option("--max-order", opt.max_order, "Coset bound for the brute-force rank oracle")
      ->check(CLI::PositiveNumber);

  std::string query, desc, path, kind;
  std::int64_t n = 0;
  bool sweep = false;
  std::string corpus_path = default_corpus_path();

  auto* classify = app.add_subcommand("classify", "Geometry, essentialness and algebraic type of each piece");
  classify->add_option("description", desc, "Manifold description")->required();

  auto* decide_cmd = app.add_subcommand("decide", "Answer one query: product | ntbundle | anybundle | presentable");
  decide_cmd->add_option("query", query)->required();
  decide_cmd->add_option("description", desc)->required();

  auto* witness = app.add_subcommand("witness", "Decision with witness detail and verification: product | ntbundle");
  witness->add_option("query", query)->required();
  witness->add_option("description", desc)->required();

  auto* verify = app.add_subcommand("verify", "Verify a branched-cover schema JSON file");
  verify->add_option("schema-file", path)->required();

  auto* schema = app.add_subcommand("schema", "Emit a branched-cover schema: pillowcase | product <n> | ntbundle <n>");
  schema->add_option("kind", kind)->required();
  schema->add_option("n", n)->check(CLI::NonNegativeNumber);

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare the three decision paths");
  crosscheck->add_option("description", desc);
  crosscheck->add_flag("--sweep", sweep, "Run the exhaustive small-input sweep");

  auto* corpus = app.add_subcommand("corpus", "Run the corpus against its expected-verdict table");
  corpus->add_option("--corpus", corpus_path, "Corpus file (expected verdicts in <stem>.expected.tsv)");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", opt.json_output, "Emit a structured JSON report");
    sub->add_option("--max-order", opt.max_order, "Coset bound for the brute-force rank oracle")
        ->check(CLI::PositiveNumber);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitRejected;
  }

  try {
    if (*classify) return cmd_classify(desc, opt, out);
    if (*decide_cmd) return cmd_decide(query, desc, opt, out, err);
    if (*witness) return cmd_witness(query, desc, opt, out, err);
    if (*verify) return cmd_verify(path, opt, out, err);
    if (*schema) return cmd_schema(kind, n, out, err);
    if (*crosscheck) return cmd_crosscheck(desc, sweep, opt, out, err);
    if (*corpus) return cmd_corpus(corpus_path, opt, out, err);
  } catch (const InputError& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const OracleBoundError& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  }
  err << app.help();
  return kExitRejected;
}

}  // namespace domination::cli
