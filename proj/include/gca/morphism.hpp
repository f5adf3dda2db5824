#ifndef GCA_MORPHISM_HPP
#define GCA_MORPHISM_HPP

#include <vector>

#include "gca/tree_calculus.hpp"

namespace gca {

// Injective tree maps between fibers built from two kinds of step:
//   translate(gamma): fiber at t(gamma) -> fiber at o(gamma), p |-> gamma.p
//   include(sub, super): fiber of a subgraph -> same base in the supergraph,
//                        edges matched by bundle name
// Steps compose left to right. Graphs must outlive the morphism.
class TreeMorphism {
 public:
  static TreeMorphism identity(const Graph& g, VertexId base);
  static TreeMorphism translate(const Graph& g, const Path& gamma);
  static TreeMorphism include(const Graph& sub, const Graph& super, VertexId base_in_sub);

  // this, followed by next
  TreeMorphism then(const TreeMorphism& next) const;

  Fiber source() const { return Fiber(*source_graph_, source_base_); }
  Fiber target() const { return Fiber(*target_graph_, target_base_); }

  Path apply(const Path& p) const;
  EdgeInstance apply(EdgeInstance e) const;
  BasicSet apply(const BasicSet& b) const;

 private:
  struct Step {
    const Graph* from;
    const Graph* to;
    Path gamma;  // used when from == to
  };

  TreeMorphism() = default;
  static Path map_path(const Step& s, const Path& p);
  static EdgeInstance map_edge(const Step& s, EdgeInstance e);

  const Graph* source_graph_ = nullptr;
  const Graph* target_graph_ = nullptr;
  VertexId source_base_;
  VertexId target_base_;
  std::vector<Step> steps_;
};

// Blockwise V(v;F) |-> V(a(v); a(F)), then canonicalized in the target.
RingSet pushforward(const TreeMorphism& a, const RingSet& x);

// For sub a subgraph of super and S inside sigma(super): the vertices of sub
// lying in S whose super-exits all belong to sub with the same multiplicity.
// Result is indexed by sub's vertex ids.
VertexSet induced_S(const Graph& sub, const Graph& super, const VertexSet& s_super);

// Vertex set of one graph expressed in another by name; vertices absent from
// the target are dropped.
VertexSet transfer(const Graph& from, const Graph& to, const VertexSet& s);

}  // namespace gca

#endif
