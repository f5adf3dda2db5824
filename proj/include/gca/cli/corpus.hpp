#ifndef GCA_CLI_CORPUS_HPP
#define GCA_CLI_CORPUS_HPP

#include <string>
#include <vector>

#include "gca/cli/json_io.hpp"

namespace gca::cli {

// <name>.graph with an optional <name>.expected.json beside it.
struct CorpusEntry {
  std::string name;
  std::string graph_file;
  Json expected;  // null when there is no expectation file
};

std::vector<CorpusEntry> load_corpus(const std::string& dir);

struct CorpusOptions {
  std::uint64_t omega_bound = 0;
  std::size_t cap = 1000000;
};

// Everything the expectation files can mention, computed afresh.
Json corpus_actual(const Graph& g, const CorpusOptions& opts = {});

// Keys of expected whose values differ from actual ("verdicts.simple", ...).
std::vector<std::string> corpus_mismatches(const Json& expected, const Json& actual);

}  // namespace gca::cli

#endif
