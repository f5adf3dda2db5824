#ifndef GCA_INVARIANTS_HPP
#define GCA_INVARIANTS_HPP

#include <utility>
#include <vector>

#include "gca/cover.hpp"
#include "gca/invariant.hpp"
#include "gca/tree_calculus.hpp"

namespace gca {

struct EnumerationOptions {
  // How many instances of each omega bundle may appear in an exclusion set.
  std::uint64_t omega_bound = 0;
  std::size_t cap = 1000000;  // candidates examined
};

struct InvariantFamily {
  std::vector<Invariant> invariants;  // sorted by size of N, then lexicographically
  // Some valid invariant would stay valid after excluding one more instance
  // of an omega bundle (so the listed ones are a truncation of an infinite family).
  bool omega_family = false;
  // Some invariant excludes an edge whose terminus is a member with infinitely
  // many exits (the case where exclusions are forced at the terminus).
  bool infinite_target_exclusion = false;
};

InvariantFamily enumerate_invariants(const Graph& g, const EnumerationOptions& opts = {});

// Covering pairs (i, j), invariants[i] < invariants[j] with nothing between.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<Invariant>& invs);

// Union of V(p; F_t(p)) over members p of the fiber with length <= depth.
RingSet open_set_of(const Fiber& t, const LiftedInvariant& inv, std::size_t depth, std::uint64_t omega_instances = 2);

struct LocalInvariant {
  bool member = false;
  std::vector<EdgeInstance> excluded;
  bool operator==(const LocalInvariant&) const = default;
};

// The invariant determined by the boundary open set [W], evaluated at one
// tree vertex. Exact: containments are decided by the ring calculus.
LocalInvariant invariant_of_open_at(const Fiber& t, const RingSet& w, const Path& v);

// Tree vertices at which L(W) has to be known to rebuild [W]: the apexes of W
// and, for apexes outside L(W), their non-excluded children.
std::vector<Path> covering_vertices(const Fiber& t, const RingSet& w);
// Union of V(p; F_p) from invariant_of_open_at over the given vertices.
RingSet rebuild_open(const Fiber& t, const RingSet& w, const std::vector<Path>& vertices);

struct QuotientData {
  VertexSet r;        // members with nonempty exclusions
  Graph quotient;     // on (E0 \ N) + R, edges with both ends kept
  VertexSet s;        // R plus the regular vertices outside N; ids of the original graph
  VertexSet s_quotient;  // the same set in the quotient graph's ids
};

QuotientData quotient_data(const Graph& g, const Invariant& inv);

// The open sets U = union of V(p; F_p) over members and P = union of V(p)
// over members without exclusions, on one fiber up to a depth.
struct QuotientBlocks {
  RingSet u;
  RingSet p;
};
QuotientBlocks quotient_blocks(const Fiber& t, const Invariant& inv, std::size_t depth,
                               std::uint64_t omega_instances = 2);

}  // namespace gca

#endif
