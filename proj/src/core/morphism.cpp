#include "gca/morphism.hpp"

#include "gca/errors.hpp"

namespace gca {

TreeMorphism TreeMorphism::identity(const Graph& g, VertexId base) {
  g.vertex_name(base);
  TreeMorphism m;
  m.source_graph_ = m.target_graph_ = &g;
  m.source_base_ = m.target_base_ = base;
  return m;
}

TreeMorphism TreeMorphism::translate(const Graph& g, const Path& gamma) {
  TreeMorphism m;
  m.source_graph_ = m.target_graph_ = &g;
  m.source_base_ = gamma.terminus();
  m.target_base_ = gamma.origin();
  m.steps_.push_back(Step{&g, &g, gamma});
  return m;
}

TreeMorphism TreeMorphism::include(const Graph& sub, const Graph& super, VertexId base_in_sub) {
  if (!is_subgraph(sub, super)) throw DomainError("inclusion requires a subgraph");
  TreeMorphism m;
  m.source_graph_ = &sub;
  m.target_graph_ = &super;
  m.source_base_ = base_in_sub;
  m.target_base_ = super.vertex(sub.vertex_name(base_in_sub));
  m.steps_.push_back(Step{&sub, &super, Path::unit(base_in_sub)});
  return m;
}

TreeMorphism TreeMorphism::then(const TreeMorphism& next) const {
  if (next.source_graph_ != target_graph_ || next.source_base_ != target_base_)
    throw DomainError("morphisms are not composable");
  TreeMorphism m = *this;
  m.target_graph_ = next.target_graph_;
  m.target_base_ = next.target_base_;
  m.steps_.insert(m.steps_.end(), next.steps_.begin(), next.steps_.end());
  return m;
}

EdgeInstance TreeMorphism::map_edge(const Step& s, EdgeInstance e) {
  if (s.from == s.to) return e;
  const EdgeBundle& b = s.from->bundle(e.bundle);
  return EdgeInstance{s.to->bundle_id(b.name), e.index};
}

Path TreeMorphism::map_path(const Step& s, const Path& p) {
  if (s.from == s.to) return s.gamma * p;
  std::vector<SignedEdge> w;
  w.reserve(p.length());
  for (const SignedEdge& e : p.word()) w.push_back(SignedEdge{map_edge(s, e.instance), e.reversed});
  return Path::from_word(*s.to, s.to->vertex(s.from->vertex_name(p.origin())), w);
}

Path TreeMorphism::apply(const Path& p) const {
  if (p.origin() != source_base_) throw DomainError("vertex outside the morphism's source fiber");
  Path out = p;
  for (const Step& s : steps_) out = map_path(s, out);
  return out;
}

EdgeInstance TreeMorphism::apply(EdgeInstance e) const {
  for (const Step& s : steps_) e = map_edge(s, e);
  return e;
}

BasicSet TreeMorphism::apply(const BasicSet& b) const {
  std::vector<EdgeInstance> ex;
  for (EdgeInstance e : b.excluded) ex.push_back(apply(e));
  return make_basic(target(), apply(b.apex), std::move(ex));
}

RingSet pushforward(const TreeMorphism& a, const RingSet& x) {
  RingSet out;
  for (const BasicSet& b : x.blocks) out.blocks.push_back(a.apply(b));
  return canonicalize(a.target(), std::move(out));
}

VertexSet transfer(const Graph& from, const Graph& to, const VertexSet& s) {
  VertexSet out = to.empty_set();
  for (auto i : s.members())
    if (auto v = to.find_vertex(from.vertex_name(VertexId{i}))) out.insert(v->value);
  return out;
}

VertexSet induced_S(const Graph& sub, const Graph& super, const VertexSet& s_super) {
  if (!is_subgraph(sub, super)) throw DomainError("induced S requires a subgraph");
  if (!s_super.subset_of(super.sigma())) throw DomainError("S must lie inside sigma of the larger graph");
  VertexSet out = sub.empty_set();
  for (VertexId v : sub.vertices()) {
    const VertexId w = super.vertex(sub.vertex_name(v));
    if (!s_super.contains(w.value)) continue;
    bool all_present = true;
    for (BundleId b : super.out_bundles(w)) {
      const EdgeBundle& eb = super.bundle(b);
      auto mine = sub.find_bundle(eb.name);
      if (!mine || !(sub.bundle(*mine).multiplicity == eb.multiplicity)) {
        all_present = false;
        break;
      }
    }
    if (all_present) out.insert(v.value);
  }
  return out;
}

}  // namespace gca
