#ifndef GCA_TREE_CALCULUS_HPP
#define GCA_TREE_CALCULUS_HPP

#include <compare>
#include <string>
#include <vector>

#include "gca/graph.hpp"
#include "gca/path.hpp"
#include "gca/point.hpp"

namespace gca {

// The directed tree of reduced paths starting at a base vertex. There is an
// edge p -> p.e for every positive edge e leaving t(p); when p ends in the
// reversal of e the child p.e is shorter than p. A tree graph's fiber at a
// vertex is isomorphic to that vertex's component, so explicit trees use the
// same type. Holds a pointer to the graph, which must outlive it.
class Fiber {
 public:
  Fiber(const Graph& g, VertexId base);

  const Graph& graph() const noexcept { return *graph_; }
  VertexId base() const noexcept { return base_; }
  Path root() const { return Path::unit(base_); }
  bool contains(const Path& p) const { return p.origin() == base_; }
  void require(const Path& p) const;

  Delta1 delta1(const Path& p) const { return graph_->delta1(p.terminus()); }
  Path child(const Path& p, EdgeInstance e) const;
  // Sink or infinite emitter underneath.
  bool is_boundary_vertex(const Path& p) const;
  // Reduced word labelling the unique tree path from p to q.
  Path between(const Path& p, const Path& q) const { return p.inverse() * q; }

  // All vertices of length <= depth, shortlex order; omega bundles contribute
  // their first omega_instances copies. Throws ResourceLimitError past cap.
  std::vector<Path> ball(std::size_t depth, std::uint64_t omega_instances = 2, std::size_t cap = 200000) const;

 private:
  const Graph* graph_;
  VertexId base_;
};

// V(apex; excluded): apex plus everything reachable from it by a directed
// tree path whose first edge is not excluded.
struct BasicSet {
  Path apex;
  std::vector<EdgeInstance> excluded;  // sorted, unique, all leaving t(apex)

  bool operator==(const BasicSet&) const = default;
  std::strong_ordering operator<=>(const BasicSet& other) const;
};

BasicSet make_basic(const Fiber& t, Path apex, std::vector<EdgeInstance> excluded = {});

// Finite disjoint union of basic sets; no blocks means the empty set.
struct RingSet {
  std::vector<BasicSet> blocks;

  bool empty() const { return blocks.empty(); }
  bool operator==(const RingSet&) const = default;
};

RingSet ring_of(const BasicSet& b);

// Equals {apex}: finitely many edges leave the apex and all are excluded.
bool is_singleton(const Fiber& t, const BasicSet& b);

// C is a subset of B.
bool basic_contains(const Fiber& t, const BasicSet& b, const BasicSet& c);
RingSet basic_intersect(const Fiber& t, const BasicSet& b, const BasicSet& c);
RingSet basic_diff(const Fiber& t, const BasicSet& b, const BasicSet& c);

RingSet ring_intersect(const Fiber& t, const RingSet& x, const RingSet& y);
RingSet ring_diff(const Fiber& t, const RingSet& x, const RingSet& y);
RingSet ring_union(const Fiber& t, const RingSet& x, const RingSet& y);
RingSet ring_symmdiff(const Fiber& t, const RingSet& x, const RingSet& y);
bool ring_equals(const Fiber& t, const RingSet& x, const RingSet& y);
bool ring_subset(const Fiber& t, const RingSet& x, const RingSet& y);
// Merges V(v;F+{e}) with V(v.e) until nothing merges, then sorts blocks.
RingSet canonicalize(const Fiber& t, RingSet x);
// Pairwise disjointness of blocks, via basic_intersect.
bool blocks_disjoint(const Fiber& t, const RingSet& x);

bool vertex_member(const Fiber& t, const Path& v, const BasicSet& b);
bool vertex_member(const Fiber& t, const Path& v, const RingSet& x);

// Whether x belongs to the closure of X in the boundary, i.e. X lies in the
// ultrafilter of x. For a finite point this is membership of the vertex; for
// a lasso it is decided at one position past every apex and the stem.
bool point_member(const Fiber& t, const BoundaryPoint& x, const RingSet& set);

// The vertex is a boundary point of the tree (no edges, or infinitely many).
bool boundary_vertex(const Fiber& t, const Path& v);
// [X] meets the boundary nowhere: every block is a singleton at a regular vertex.
bool boundary_empty(const Fiber& t, const RingSet& x);
bool boundary_subset(const Fiber& t, const RingSet& x, const RingSet& y);
bool boundary_equals(const Fiber& t, const RingSet& x, const RingSet& y);

// X is a finite union of singletons {p} with t(p) in S. S must lie in sigma.
bool quotient_kernel_member(const Fiber& t, const RingSet& x, const VertexSet& s);

std::string format_basic(const Fiber& t, const BasicSet& b);
std::string format_ring(const Fiber& t, const RingSet& x);

}  // namespace gca

#endif
