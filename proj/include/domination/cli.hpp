#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domination::cli {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInconsistent = 2;

/// Runs one command line (without the program name). Exit codes: 0 the query
/// was answered (the verdict may be NO), 1 the input was rejected, 2 an
/// internal consistency check failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Path of the corpus bundled with the sources.
std::string default_corpus_path();

}  // namespace domination::cli
