#include "gca/invariants.hpp"
#include "gca/morphism.hpp"

#include <algorithm>

#include "gca/errors.hpp"

namespace gca {

namespace {

bool invariant_less(const Invariant& a, const Invariant& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  const auto ma = a.members.members(), mb = b.members.members();
  if (ma != mb) return ma < mb;
  return a.excluded < b.excluded;
}

std::vector<std::vector<EdgeInstance>> subsets(const std::vector<EdgeInstance>& items) {
  std::vector<std::vector<EdgeInstance>> out{{}};
  for (EdgeInstance e : items) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto s = out[i];
      s.push_back(e);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

InvariantFamily enumerate_invariants(const Graph& g, const EnumerationOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (n > 24) throw ResourceLimitError("invariant enumeration supports at most 24 vertices");
  InvariantFamily fam;
  std::size_t examined = 0;
  std::vector<std::vector<EdgeInstance>> choices(n);
  for (VertexId v : g.vertices()) {
    const Delta1 d = g.delta1(v);
    if (d.infinite()) choices[v.value] = d.truncated(opts.omega_bound);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Invariant inv = Invariant::empty(g);
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1U) inv.members.insert(i);
    // Members excluding nothing must keep every exit inside N.
    bool closed = true;
    for (auto i : inv.members.members()) {
      const VertexId u{i};
      for (BundleId b : g.out_bundles(u)) {
        const EdgeBundle& eb = g.bundle(b);
        if ((choices[i].empty() || eb.multiplicity.is_omega()) && !inv.contains(eb.terminus)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<VertexId> free_vertices;
    for (auto i : inv.members.members())
      if (!choices[i].empty()) free_vertices.push_back(VertexId{i});
    std::vector<std::vector<std::vector<EdgeInstance>>> options;
    for (VertexId v : free_vertices) options.push_back(subsets(choices[v.value]));
    std::vector<std::size_t> pick(free_vertices.size(), 0);
    while (true) {
      if (++examined > opts.cap) throw ResourceLimitError("invariant enumeration exceeded its candidate cap");
      Invariant cand = inv;
      for (std::size_t k = 0; k < free_vertices.size(); ++k)
        if (!options[k][pick[k]].empty()) cand.excluded[free_vertices[k]] = options[k][pick[k]];
      cand.normalize();
      if (is_invariant(g, cand)) fam.invariants.push_back(std::move(cand));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  std::sort(fam.invariants.begin(), fam.invariants.end(), invariant_less);
  for (const Invariant& inv : fam.invariants) {
    for (auto i : inv.members.members()) {
      const VertexId u{i};
      for (BundleId b : g.out_bundles(u)) {
        if (!g.bundle(b).multiplicity.is_omega()) continue;
        Invariant more = inv;
        more.excluded[u].push_back(EdgeInstance{b, opts.omega_bound});
        more.normalize();
        if (is_invariant(g, more)) fam.omega_family = true;
      }
      for (EdgeInstance e : inv.excluded_at(u)) {
        const VertexId t = g.terminus(e);
        if (inv.contains(t) && g.kind(t) == VertexKind::InfiniteEmitter) fam.infinite_target_exclusion = true;
      }
    }
  }
  return fam;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<Invariant>& invs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t j = 0; j < invs.size(); ++j) {
      if (i == j || !invariant_leq(invs[i], invs[j]) || invs[i] == invs[j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < invs.size() && cover; ++k) {
        if (k == i || k == j) continue;
        if (invariant_leq(invs[i], invs[k]) && invariant_leq(invs[k], invs[j]) && !(invs[k] == invs[i]) &&
            !(invs[k] == invs[j]))
          cover = false;
      }
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

RingSet open_set_of(const Fiber& t, const LiftedInvariant& inv, std::size_t depth, std::uint64_t omega_instances) {
  RingSet out;
  for (const Path& p : t.ball(depth, omega_instances)) {
    if (!inv.contains(p) || vertex_member(t, p, out)) continue;
    out = ring_union(t, out, ring_of(make_basic(t, p, inv.excluded_at(p))));
  }
  return out;
}

LocalInvariant invariant_of_open_at(const Fiber& t, const RingSet& w, const Path& v) {
  t.require(v);
  const Graph& g = t.graph();
  LocalInvariant out;
  switch (g.kind(v.terminus())) {
    case VertexKind::Regular:
      out.member = boundary_subset(t, ring_of(make_basic(t, v)), w);
      return out;
    case VertexKind::Sink:
      out.member = vertex_member(t, v, w);
      return out;
    case VertexKind::InfiniteEmitter:
      break;
  }
  out.member = vertex_member(t, v, w);
  if (!out.member) return out;
  // Only exits named by W can have a child cone not covered by W.
  std::vector<EdgeInstance> named;
  for (const BasicSet& b : w.blocks) {
    if (b.apex == v) named.insert(named.end(), b.excluded.begin(), b.excluded.end());
    const Path word = t.between(v, b.apex);
    if (!word.is_unit() && !word[0].reversed) named.push_back(word[0].instance);
  }
  std::sort(named.begin(), named.end());
  named.erase(std::unique(named.begin(), named.end()), named.end());
  for (EdgeInstance e : named)
    if (!boundary_subset(t, ring_of(make_basic(t, t.child(v, e))), w)) out.excluded.push_back(e);
  return out;
}

std::vector<Path> covering_vertices(const Fiber& t, const RingSet& w) {
  std::vector<Path> out;
  for (const BasicSet& b : w.blocks) {
    out.push_back(b.apex);
    if (invariant_of_open_at(t, w, b.apex).member) continue;
    const Delta1 d = t.delta1(b.apex);
    if (d.infinite()) throw InvariantBreach("apex with infinitely many exits is always a member");
    for (EdgeInstance e : d.finite)
      if (!std::binary_search(b.excluded.begin(), b.excluded.end(), e)) out.push_back(t.child(b.apex, e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RingSet rebuild_open(const Fiber& t, const RingSet& w, const std::vector<Path>& vertices) {
  RingSet out;
  for (const Path& p : vertices) {
    const LocalInvariant local = invariant_of_open_at(t, w, p);
    if (local.member) out = ring_union(t, out, ring_of(make_basic(t, p, local.excluded)));
  }
  return out;
}

QuotientData quotient_data(const Graph& g, const Invariant& inv) {
  if (auto v = check_invariant(g, inv)) throw DomainError("not an invariant: " + v->message);
  QuotientData q{g.empty_set(), Graph{}, g.empty_set(), VertexSet{}};
  for (const auto& [v, f] : inv.excluded)
    if (!f.empty()) q.r.insert(v.value);
  const VertexSet kept = (g.all_vertices() - inv.members) | q.r;
  for (VertexId v : g.vertices())
    if (kept.contains(v.value)) q.quotient.add_vertex(g.vertex_name(v));
  for (std::uint32_t i = 0; i < g.bundle_count(); ++i) {
    const EdgeBundle& b = g.bundle(BundleId{i});
    if (kept.contains(b.origin.value) && kept.contains(b.terminus.value))
      q.quotient.add_bundle(b.name, q.quotient.vertex(g.vertex_name(b.origin)),
                            q.quotient.vertex(g.vertex_name(b.terminus)), b.multiplicity);
  }
  q.s = q.r | (g.sigma() - inv.members);
  q.s_quotient = transfer(g, q.quotient, q.s);
  return q;
}

QuotientBlocks quotient_blocks(const Fiber& t, const Invariant& inv, std::size_t depth,
                               std::uint64_t omega_instances) {
  QuotientBlocks out;
  for (const Path& p : t.ball(depth, omega_instances)) {
    if (!inv.contains(p.terminus())) continue;
    const auto& f = inv.excluded_at(p.terminus());
    if (!vertex_member(t, p, out.u)) out.u = ring_union(t, out.u, ring_of(make_basic(t, p, f)));
    if (f.empty() && !vertex_member(t, p, out.p)) out.p = ring_union(t, out.p, ring_of(make_basic(t, p)));
  }
  return out;
}

}  // namespace gca
