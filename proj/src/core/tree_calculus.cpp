#include "gca/tree_calculus.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "gca/errors.hpp"

namespace gca {

Fiber::Fiber(const Graph& g, VertexId base) : graph_(&g), base_(base) { g.vertex_name(base); }

void Fiber::require(const Path& p) const {
  if (!contains(p)) throw DomainError("path does not start at the fiber base " + graph_->vertex_name(base_));
}

Path Fiber::child(const Path& p, EdgeInstance e) const {
  if (graph_->origin(e) != p.terminus()) throw DomainError("edge does not leave this tree vertex");
  return p.then(*graph_, SignedEdge{e, false});
}

bool Fiber::is_boundary_vertex(const Path& p) const { return graph_->kind(p.terminus()) != VertexKind::Regular; }

std::vector<Path> Fiber::ball(std::size_t depth, std::uint64_t omega_instances, std::size_t cap) const {
  // Reduced words of length <= depth, generated letter by letter.
  std::vector<Path> out{root()};
  std::size_t layer_begin = 0;
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const Path p = out[i];
      const VertexId at = p.terminus();
      std::vector<SignedEdge> letters;
      for (EdgeInstance e : graph_->delta1(at).truncated(omega_instances)) letters.push_back({e, false});
      for (BundleId b : graph_->in_bundles(at)) {
        const Multiplicity& m = graph_->bundle(b).multiplicity;
        const std::uint64_t n = m.is_omega() ? omega_instances : m.count();
        for (std::uint64_t k = 0; k < n; ++k) letters.push_back({EdgeInstance{b, k}, true});
      }
      std::sort(letters.begin(), letters.end());
      for (const SignedEdge& e : letters) {
        if (!p.is_unit() && p.back() == e.inverse()) continue;
        out.push_back(p.then(*graph_, e));
        if (out.size() > cap) throw ResourceLimitError("fiber ball exceeds " + std::to_string(cap) + " vertices");
      }
    }
    layer_begin = layer_end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering BasicSet::operator<=>(const BasicSet& other) const {
  if (auto c = apex <=> other.apex; c != 0) return c;
  if (auto c = excluded.size() <=> other.excluded.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(excluded.begin(), excluded.end(), other.excluded.begin(),
                                                other.excluded.end());
}

BasicSet make_basic(const Fiber& t, Path apex, std::vector<EdgeInstance> excluded) {
  t.require(apex);
  const Graph& g = t.graph();
  for (EdgeInstance e : excluded) {
    g.require(e);
    if (g.origin(e) != apex.terminus())
      throw DomainError("excluded edge " + g.label(e) + " does not leave the apex " + apex.format(g));
  }
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  return BasicSet{std::move(apex), std::move(excluded)};
}

RingSet ring_of(const BasicSet& b) { return RingSet{{b}}; }

namespace {

bool excludes(const BasicSet& b, EdgeInstance e) { return std::binary_search(b.excluded.begin(), b.excluded.end(), e); }

std::vector<EdgeInstance> merged(const std::vector<EdgeInstance>& a, const std::vector<EdgeInstance>& b) {
  std::vector<EdgeInstance> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

enum class Relation { Same, Below, Above, Meet, Apart };

// Shape of the tree path from u to v. Below: v is a descendant of u.
// Meet: u -> z <- v with split the number of forward letters.
struct Position {
  Relation rel;
  Path word;
  std::size_t split = 0;
};

Position locate(const Fiber& t, const Path& u, const Path& v) {
  Position pos{Relation::Apart, t.between(u, v), 0};
  const auto& w = pos.word.word();
  if (w.empty()) {
    pos.rel = Relation::Same;
    return pos;
  }
  std::size_t k = 0;
  while (k < w.size() && !w[k].reversed) ++k;
  std::size_t j = k;
  while (j < w.size() && w[j].reversed) ++j;
  if (j != w.size()) return pos;  // reversed letters followed by forward ones
  pos.split = k;
  if (k == w.size()) {
    pos.rel = Relation::Below;
  } else if (k == 0) {
    pos.rel = Relation::Above;
  } else {
    pos.rel = Relation::Meet;
  }
  return pos;
}

BasicSet basic_at(Path apex) { return BasicSet{std::move(apex), {}}; }

// B minus C where the apex of C is a proper descendant of the apex of B.
RingSet diff_below(const Fiber& t, const BasicSet& b, const BasicSet& c, const Path& word) {
  const EdgeInstance first = word[0].instance;
  if (excludes(b, first)) return ring_of(b);
  RingSet out;
  out.blocks.push_back(BasicSet{b.apex, merged(b.excluded, {first})});
  Path at = t.child(b.apex, first);
  for (std::size_t i = 1; i < word.length(); ++i) {
    out.blocks.push_back(BasicSet{at, {word[i].instance}});
    at = t.child(at, word[i].instance);
  }
  for (EdgeInstance e : c.excluded) out.blocks.push_back(basic_at(t.child(c.apex, e)));
  return out;
}

}  // namespace

bool is_singleton(const Fiber& t, const BasicSet& b) {
  const Delta1 d = t.delta1(b.apex);
  if (d.infinite() || d.finite.empty()) return false;
  return b.excluded.size() == d.finite.size();
}

bool basic_contains(const Fiber& t, const BasicSet& b, const BasicSet& c) {
  const Position pos = locate(t, b.apex, c.apex);
  switch (pos.rel) {
    case Relation::Same:
      return std::includes(c.excluded.begin(), c.excluded.end(), b.excluded.begin(), b.excluded.end()) ||
             is_singleton(t, c);
    case Relation::Below:
      return !excludes(b, pos.word[0].instance);
    default:
      return false;
  }
}

RingSet basic_intersect(const Fiber& t, const BasicSet& b, const BasicSet& c) {
  const Position pos = locate(t, b.apex, c.apex);
  switch (pos.rel) {
    case Relation::Same:
      return ring_of(BasicSet{b.apex, merged(b.excluded, c.excluded)});
    case Relation::Below:
      return excludes(b, pos.word[0].instance) ? RingSet{} : ring_of(c);
    case Relation::Above:
      return excludes(c, pos.word.back().instance) ? RingSet{} : ring_of(b);
    case Relation::Meet: {
      if (excludes(b, pos.word[0].instance) || excludes(c, pos.word.back().instance)) return {};
      return ring_of(basic_at(b.apex * pos.word.prefix(t.graph(), pos.split)));
    }
    case Relation::Apart:
      return {};
  }
  throw InvariantBreach("unreachable relation");
}

RingSet basic_diff(const Fiber& t, const BasicSet& b, const BasicSet& c) {
  const Position pos = locate(t, b.apex, c.apex);
  switch (pos.rel) {
    case Relation::Same: {
      RingSet out;
      for (EdgeInstance e : c.excluded)
        if (!excludes(b, e)) out.blocks.push_back(basic_at(t.child(b.apex, e)));
      return out;
    }
    case Relation::Below:
      return diff_below(t, b, c, pos.word);
    case Relation::Above:
      return excludes(c, pos.word.back().instance) ? ring_of(b) : RingSet{};
    case Relation::Meet: {
      if (excludes(b, pos.word[0].instance) || excludes(c, pos.word.back().instance)) return ring_of(b);
      const Path down = pos.word.prefix(t.graph(), pos.split);
      return diff_below(t, b, basic_at(b.apex * down), down);
    }
    case Relation::Apart:
      return ring_of(b);
  }
  throw InvariantBreach("unreachable relation");
}

RingSet canonicalize(const Fiber& t, RingSet x) {
  std::map<Path, std::size_t> whole;  // apex -> index of a block with nothing excluded
  auto rebuild = [&] {
    whole.clear();
    for (std::size_t i = 0; i < x.blocks.size(); ++i)
      if (x.blocks[i].excluded.empty()) whole.emplace(x.blocks[i].apex, i);
  };
  rebuild();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < x.blocks.size() && !changed; ++i) {
      BasicSet& b = x.blocks[i];
      for (std::size_t k = 0; k < b.excluded.size(); ++k) {
        auto it = whole.find(t.child(b.apex, b.excluded[k]));
        if (it == whole.end()) continue;
        const std::size_t victim = it->second;
        b.excluded.erase(b.excluded.begin() + static_cast<std::ptrdiff_t>(k));
        x.blocks.erase(x.blocks.begin() + static_cast<std::ptrdiff_t>(victim));
        changed = true;
        break;
      }
    }
    if (changed) rebuild();
  }
  std::sort(x.blocks.begin(), x.blocks.end());
  return x;
}

RingSet ring_intersect(const Fiber& t, const RingSet& x, const RingSet& y) {
  RingSet out;
  for (const BasicSet& b : x.blocks)
    for (const BasicSet& c : y.blocks) {
      RingSet part = basic_intersect(t, b, c);
      out.blocks.insert(out.blocks.end(), part.blocks.begin(), part.blocks.end());
    }
  return canonicalize(t, std::move(out));
}

namespace {
std::vector<BasicSet> raw_diff(const Fiber& t, const RingSet& x, const RingSet& y) {
  std::vector<BasicSet> out;
  for (const BasicSet& b : x.blocks) {
    std::vector<BasicSet> current{b};
    for (const BasicSet& c : y.blocks) {
      std::vector<BasicSet> next;
      for (const BasicSet& d : current) {
        RingSet part = basic_diff(t, d, c);
        next.insert(next.end(), part.blocks.begin(), part.blocks.end());
      }
      current.swap(next);
      if (current.empty()) break;
    }
    out.insert(out.end(), current.begin(), current.end());
  }
  return out;
}
}  // namespace

RingSet ring_diff(const Fiber& t, const RingSet& x, const RingSet& y) {
  return canonicalize(t, RingSet{raw_diff(t, x, y)});
}

RingSet ring_union(const Fiber& t, const RingSet& x, const RingSet& y) {
  RingSet out = x;
  auto rest = raw_diff(t, y, x);
  out.blocks.insert(out.blocks.end(), rest.begin(), rest.end());
  return canonicalize(t, std::move(out));
}

RingSet ring_symmdiff(const Fiber& t, const RingSet& x, const RingSet& y) {
  RingSet out{raw_diff(t, x, y)};
  auto rest = raw_diff(t, y, x);
  out.blocks.insert(out.blocks.end(), rest.begin(), rest.end());
  return canonicalize(t, std::move(out));
}

bool ring_subset(const Fiber& t, const RingSet& x, const RingSet& y) { return raw_diff(t, x, y).empty(); }

bool ring_equals(const Fiber& t, const RingSet& x, const RingSet& y) {
  return ring_subset(t, x, y) && ring_subset(t, y, x);
}

bool blocks_disjoint(const Fiber& t, const RingSet& x) {
  for (std::size_t i = 0; i < x.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < x.blocks.size(); ++j)
      if (!basic_intersect(t, x.blocks[i], x.blocks[j]).empty()) return false;
  return true;
}

bool vertex_member(const Fiber& t, const Path& v, const BasicSet& b) {
  if (v == b.apex) return true;
  const Path w = t.between(b.apex, v);
  return w.is_directed() && !excludes(b, w[0].instance);
}

bool vertex_member(const Fiber& t, const Path& v, const RingSet& x) {
  return std::any_of(x.blocks.begin(), x.blocks.end(), [&](const BasicSet& b) { return vertex_member(t, v, b); });
}

bool point_member(const Fiber& t, const BoundaryPoint& x, const RingSet& set) {
  if (x.origin() != t.base()) throw DomainError("point does not lie in this fiber");
  if (!x.is_lasso()) return vertex_member(t, x.path(), set);
  std::size_t j = x.stem().length();
  for (const BasicSet& b : set.blocks) j = std::max(j, b.apex.length() + 1);
  return vertex_member(t, x.prefix(t.graph(), j), set);
}

bool boundary_vertex(const Fiber& t, const Path& v) {
  t.require(v);
  return t.is_boundary_vertex(v);
}

bool boundary_empty(const Fiber& t, const RingSet& x) {
  return std::all_of(x.blocks.begin(), x.blocks.end(), [&](const BasicSet& b) { return is_singleton(t, b); });
}

bool boundary_subset(const Fiber& t, const RingSet& x, const RingSet& y) {
  return boundary_empty(t, RingSet{raw_diff(t, x, y)});
}

bool boundary_equals(const Fiber& t, const RingSet& x, const RingSet& y) {
  return boundary_subset(t, x, y) && boundary_subset(t, y, x);
}

bool quotient_kernel_member(const Fiber& t, const RingSet& x, const VertexSet& s) {
  const VertexSet sigma = t.graph().sigma();
  if (!s.subset_of(sigma)) throw DomainError("S must consist of vertices with finitely many, but some, exits");
  return std::all_of(x.blocks.begin(), x.blocks.end(),
                     [&](const BasicSet& b) { return is_singleton(t, b) && s.contains(b.apex.terminus().value); });
}

std::string format_basic(const Fiber& t, const BasicSet& b) {
  std::string out = "V(" + b.apex.format(t.graph());
  for (std::size_t i = 0; i < b.excluded.size(); ++i) {
    out += i == 0 ? "; " : ", ";
    out += t.graph().label(b.excluded[i]);
  }
  return out + ")";
}

std::string format_ring(const Fiber& t, const RingSet& x) {
  if (x.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    if (i) out += ", ";
    out += format_basic(t, x.blocks[i]);
  }
  return out + "}";
}

}  // namespace gca
