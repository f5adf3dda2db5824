#ifndef GCA_CLI_LIMITS_HPP
#define GCA_CLI_LIMITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gca/graph.hpp"

namespace gca::cli {

// F1 <= F2 <= ... <= E, each stage a subgraph of the next; the last stage is E.
// S lives on E.
struct LimitChain {
  std::string name;
  std::vector<Graph> stages;
  VertexSet s;
};

struct ChainCheck {
  std::string name;
  bool holds = true;
  std::string detail;
  bool skipped = false;
};

struct LimitReport {
  std::string chain;
  std::vector<VertexSet> induced;  // S on every stage, by stage ids
  std::vector<ChainCheck> checks;
  std::vector<std::optional<std::size_t>> dimensions;  // when every stage is exact
  bool all_hold() const;
};

struct LimitOptions {
  std::size_t sample_depth = 2;
  std::uint64_t omega_instances = 2;
};

// Throws DomainError when the stages are not nested or do not end at E.
LimitReport check_chain(const LimitChain& chain, const LimitOptions& opts = {});

// Subgraph on the given vertices and bundles (endpoints are added).
Graph subgraph(const Graph& g, const VertexSet& vertices, const std::vector<BundleId>& bundles);

// Three nested chains ending at g: bundles added in declaration order, in
// reverse order, and induced subgraphs on growing vertex prefixes.
std::vector<LimitChain> auto_chains(const Graph& g, const VertexSet& s);

}  // namespace gca::cli

#endif
