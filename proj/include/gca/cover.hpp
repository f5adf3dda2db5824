#ifndef GCA_COVER_HPP
#define GCA_COVER_HPP

#include <vector>

#include "gca/invariant.hpp"
#include "gca/point.hpp"
#include "gca/tree_calculus.hpp"

namespace gca {

// Cover vertices are reduced paths; (p, q) is a cover edge when p^-1 q is one
// signed edge, and a directed one when that edge is positive.
struct CoverEdge {
  Path from;
  Path to;
};

struct CoverExits {
  std::vector<CoverEdge> edges;  // omega bundles truncated
  bool omega = false;
};

CoverExits cover_delta1(const Graph& g, const Path& p, std::uint64_t omega_instances = 2);

// The fiber a cover vertex or point lies over.
inline VertexId fiber_of(const Path& p) { return p.origin(); }
inline VertexId fiber_of(const BoundaryPoint& x) { return x.origin(); }

// First n+1 vertices p_0 = base, p_1, ... of the tree ray of x.
std::vector<Path> fiber_ray(const Graph& g, const BoundaryPoint& x, std::size_t n);
// Word read off a ray: product of the steps p_i^-1 p_(i+1).
Path underline(const std::vector<Path>& ray);

struct StandardForm {
  Path beta1;
  Path beta2;
  BoundaryPoint x;
};

// Requires t(alpha) = origin of y. alpha = beta1 beta2^-1, y = beta2 x, and
// none of beta1.x, beta2.x, beta1.beta2^-1 cancels.
StandardForm standard_form(const Graph& g, const Path& alpha, const BoundaryPoint& y);
long long cocycle(const Graph& g, const Path& alpha, const BoundaryPoint& y);

// Groupoid element (alpha, y): source y, range alpha.y.
struct Arrow {
  Path alpha;
  BoundaryPoint source;

  bool operator==(const Arrow&) const = default;
};

BoundaryPoint range(const Graph& g, const Arrow& a);
// a after b; requires a.source == range(b)
Arrow compose(const Graph& g, const Arrow& a, const Arrow& b);
Arrow inverse(const Graph& g, const Arrow& a);

// The whole word is directed and x is a boundary point for S: a lasso, or a
// finite path ending at a sink, an infinite emitter, or a regular vertex not in S.
bool in_transversal(const Graph& g, const BoundaryPoint& x, const VertexSet& s);

struct Translation {
  Path alpha;  // prefix up to the directed tail
  BoundaryPoint moved;  // alpha^-1 . x
};
Translation transversal_translate(const Graph& g, const BoundaryPoint& x);

// Arrows with equal-length directed beta1, beta2 in a finite subgraph sharing
// a terminus, in standard form. The region is the source cone V(beta2) in the
// fiber over o(beta2).
struct ArrowBlock {
  Path beta1;
  Path beta2;
  RingSet region;
};

std::vector<ArrowBlock> af_block_enumerate(const Graph& g, const Graph& sub, std::size_t depth);

// An invariant of the graph seen on one fiber: p is a member iff t(p) is,
// and the exclusions at p are those at t(p).
class LiftedInvariant {
 public:
  LiftedInvariant(const Graph& g, Invariant inv);
  bool contains(const Path& p) const { return inv_.contains(p.terminus()); }
  const std::vector<EdgeInstance>& excluded_at(const Path& p) const { return inv_.excluded_at(p.terminus()); }
  const Invariant& base() const { return inv_; }

 private:
  Invariant inv_;
};

}  // namespace gca

#endif
