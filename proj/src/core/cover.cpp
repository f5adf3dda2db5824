#include "gca/cover.hpp"

#include <algorithm>
#include <map>

#include "gca/errors.hpp"

namespace gca {

CoverExits cover_delta1(const Graph& g, const Path& p, std::uint64_t omega_instances) {
  const Delta1 d = g.delta1(p.terminus());
  CoverExits out;
  out.omega = d.infinite();
  for (EdgeInstance e : d.truncated(omega_instances)) out.edges.push_back({p, p.then(g, SignedEdge{e, false})});
  return out;
}

std::vector<Path> fiber_ray(const Graph& g, const BoundaryPoint& x, std::size_t n) {
  std::vector<Path> ray;
  const auto len = x.length();
  for (std::size_t i = 0; i <= n && (!len || i <= *len); ++i) ray.push_back(x.prefix(g, i));
  return ray;
}

Path underline(const std::vector<Path>& ray) {
  if (ray.empty()) throw DomainError("empty ray");
  Path out = Path::unit(ray.front().origin());
  for (std::size_t i = 0; i + 1 < ray.size(); ++i) {
    const Path step = ray[i].inverse() * ray[i + 1];
    if (step.length() != 1) throw DomainError("consecutive ray vertices are not adjacent");
    out = out * step;
  }
  return out;
}

StandardForm standard_form(const Graph& g, const Path& alpha, const BoundaryPoint& y) {
  if (alpha.terminus() != y.origin()) throw DomainError("arrow and point are not composable");
  const std::size_t r = cancellation_count(alpha, y);
  return StandardForm{alpha.prefix(g, alpha.length() - r), y.prefix(g, r), y.drop(g, r)};
}

long long cocycle(const Graph& g, const Path& alpha, const BoundaryPoint& y) {
  const StandardForm sf = standard_form(g, alpha, y);
  return static_cast<long long>(sf.beta1.length()) - static_cast<long long>(sf.beta2.length());
}

BoundaryPoint range(const Graph& g, const Arrow& a) { return act(g, a.alpha, a.source); }

Arrow compose(const Graph& g, const Arrow& a, const Arrow& b) {
  if (!(a.source == range(g, b))) throw DomainError("arrows are not composable");
  return Arrow{a.alpha * b.alpha, b.source};
}

Arrow inverse(const Graph& g, const Arrow& a) { return Arrow{a.alpha.inverse(), range(g, a)}; }

bool in_transversal(const Graph& g, const BoundaryPoint& x, const VertexSet& s) {
  if (!s.subset_of(g.sigma())) throw DomainError("S must lie inside sigma");
  if (!x.is_directed()) return false;
  if (x.is_lasso()) return true;
  const VertexId t = x.terminus();
  return g.kind(t) != VertexKind::Regular || !s.contains(t.value);
}

Translation transversal_translate(const Graph& g, const BoundaryPoint& x) {
  const std::size_t n = x.directed_tail_start();
  return Translation{x.prefix(g, n), x.drop(g, n)};
}

namespace {

// Directed paths of length <= depth in a graph without omega bundles.
std::vector<Path> directed_paths(const Graph& g, std::size_t depth, std::size_t cap) {
  std::vector<Path> out;
  for (VertexId v : g.vertices()) out.push_back(Path::unit(v));
  std::size_t begin = 0;
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      const Path p = out[i];
      for (EdgeInstance e : g.delta1(p.terminus()).finite) {
        out.push_back(p.then(g, SignedEdge{e, false}));
        if (out.size() > cap) throw ResourceLimitError("too many directed paths in the subgraph");
      }
    }
    begin = end;
  }
  return out;
}

Path lift_path(const Graph& sub, const Graph& g, const Path& p) {
  std::vector<SignedEdge> w;
  for (const SignedEdge& e : p.word())
    w.push_back(SignedEdge{EdgeInstance{g.bundle_id(sub.bundle(e.instance.bundle).name), e.instance.index}, e.reversed});
  return Path::from_word(g, g.vertex(sub.vertex_name(p.origin())), w);
}

}  // namespace

std::vector<ArrowBlock> af_block_enumerate(const Graph& g, const Graph& sub, std::size_t depth) {
  if (!is_subgraph(sub, g)) throw DomainError("af blocks need a subgraph of the graph");
  if (sub.has_omega()) throw DomainError("af blocks need a finite subgraph");
  std::map<std::pair<std::size_t, VertexId>, std::vector<Path>> groups;
  for (const Path& p : directed_paths(sub, depth, 100000)) {
    const Path q = lift_path(sub, g, p);
    groups[{q.length(), q.terminus()}].push_back(q);
  }
  std::vector<ArrowBlock> out;
  for (const auto& [key, paths] : groups) {
    for (const Path& b1 : paths)
      for (const Path& b2 : paths) {
        if (key.first == 0 ? !(b1 == b2) : b1.back() == b2.back()) continue;
        const Fiber f(g, b2.origin());
        out.push_back(ArrowBlock{b1, b2, ring_of(make_basic(f, b2))});
      }
  }
  return out;
}

LiftedInvariant::LiftedInvariant(const Graph& g, Invariant inv) : inv_(std::move(inv)) {
  if (auto v = check_invariant(g, inv_)) throw DomainError("not an invariant: " + v->message);
}

}  // namespace gca
