#ifndef GCA_GRAPH_HPP
#define GCA_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gca/vertex_set.hpp"

namespace gca {

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct BundleId {
  std::uint32_t value = 0;
  auto operator<=>(const BundleId&) const = default;
};

// Edge count of a bundle: a positive integer, or omega (countably many).
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t k);
  static Multiplicity omega() { return Multiplicity(0, true); }

  bool is_omega() const noexcept { return omega_; }
  // Only meaningful when finite.
  std::uint64_t count() const noexcept { return count_; }
  // Whether index is a valid instance index.
  bool admits(std::uint64_t index) const noexcept { return omega_ || index < count_; }
  bool operator==(const Multiplicity&) const = default;
  // finite k <= finite m, anything <= omega
  bool at_most(const Multiplicity& other) const noexcept;
  std::string to_string() const;

 private:
  Multiplicity(std::uint64_t k, bool omega) : count_(k), omega_(omega) {}
  std::uint64_t count_;
  bool omega_;
};

struct EdgeBundle {
  std::string name;
  VertexId origin;
  VertexId terminus;
  Multiplicity multiplicity = Multiplicity::finite(1);
};

// One positive edge: the index-th parallel copy of a bundle.
struct EdgeInstance {
  BundleId bundle;
  std::uint64_t index = 0;
  auto operator<=>(const EdgeInstance&) const = default;
};

struct SignedEdge {
  EdgeInstance instance;
  bool reversed = false;

  SignedEdge inverse() const { return {instance, !reversed}; }
  auto operator<=>(const SignedEdge&) const = default;
};

enum class VertexKind { Sink, Regular, InfiniteEmitter };

// Positive edges leaving a vertex. Finite bundles are listed instance by
// instance; omega bundles are kept symbolic.
struct Delta1 {
  std::vector<EdgeInstance> finite;
  std::vector<BundleId> omega_bundles;

  bool empty() const { return finite.empty() && omega_bundles.empty(); }
  bool infinite() const { return !omega_bundles.empty(); }
  // finite part plus the first k instances of every omega bundle
  std::vector<EdgeInstance> truncated(std::uint64_t k) const;
  // i-th instance in a fixed enumeration interleaving omega bundles
  EdgeInstance nth(std::uint64_t i) const;
};

class Graph {
 public:
  VertexId add_vertex(const std::string& name);
  BundleId add_bundle(const std::string& name, VertexId origin, VertexId terminus, Multiplicity m);

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t bundle_count() const noexcept { return bundles_.size(); }
  std::vector<VertexId> vertices() const;

  const std::string& vertex_name(VertexId v) const;
  const EdgeBundle& bundle(BundleId b) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<BundleId> find_bundle(std::string_view name) const;
  // Throw DomainError on unknown names.
  VertexId vertex(std::string_view name) const;
  BundleId bundle_id(std::string_view name) const;

  bool valid(EdgeInstance e) const;
  void require(EdgeInstance e) const;
  VertexId origin(EdgeInstance e) const { return bundle(e.bundle).origin; }
  VertexId terminus(EdgeInstance e) const { return bundle(e.bundle).terminus; }
  VertexId origin(SignedEdge e) const { return e.reversed ? terminus(e.instance) : origin(e.instance); }
  VertexId terminus(SignedEdge e) const { return e.reversed ? origin(e.instance) : terminus(e.instance); }

  const std::vector<BundleId>& out_bundles(VertexId v) const;
  const std::vector<BundleId>& in_bundles(VertexId v) const;
  Delta1 delta1(VertexId v) const;
  VertexKind kind(VertexId v) const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet sinks() const;
  VertexSet sigma() const;
  VertexSet infinite_emitters() const;
  // Vertices reachable from v along directed paths, v included.
  VertexSet reachable(VertexId v) const;
  // Vertices from which v is reachable, v included.
  VertexSet coreachable(VertexId v) const;

  bool has_omega() const;
  // Underlying undirected multigraph is acyclic (parallel edges count as cycles).
  bool is_forest() const;

  // "a" for the sole instance of a multiplicity-1 bundle, else "a#k".
  std::string label(EdgeInstance e) const;
  std::string label(SignedEdge e) const;
  // Accepts "a", "a#k", "~a", "~a#k".
  SignedEdge parse_edge(std::string_view token) const;

  std::string set_to_string(const VertexSet& s) const;
  VertexSet set_from_names(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeBundle> bundles_;
  std::vector<std::vector<BundleId>> out_;
  std::vector<std::vector<BundleId>> in_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, BundleId, std::less<>> bundle_index_;
};

// Graph-file grammar, one statement per line or ';'-separated, '#' comments:
//   vertex <name>
//   edge <name> : <origin> -> <terminus> [* <k> | * omega]
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

// E1 is a subgraph of E2: every vertex and bundle of E1 exists in E2 by name,
// with equal endpoints and multiplicity no larger.
bool is_subgraph(const Graph& sub, const Graph& super);

}  // namespace gca

#endif
