#include "support/oracles.hpp"

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

using namespace gca;

namespace {
std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
bool coin(Rng& rng) { return pick(rng, 2) == 0; }
}  // namespace

Graph random_tree(Rng& rng, std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("t" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    const VertexId child{static_cast<std::uint32_t>(i)};
    const VertexId parent{static_cast<std::uint32_t>(pick(rng, i))};
    if (coin(rng)) {
      g.add_bundle("x" + std::to_string(i), parent, child, Multiplicity::finite(1));
    } else {
      g.add_bundle("x" + std::to_string(i), child, parent, Multiplicity::finite(1));
    }
  }
  return g;
}

namespace {
Multiplicity random_multiplicity(Rng& rng, bool allow_omega) {
  const std::size_t r = pick(rng, 10);
  if (r < 7) return Multiplicity::finite(1);
  if (r < 9 || !allow_omega) return Multiplicity::finite(2);
  return Multiplicity::omega();
}
}  // namespace

Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_bundles, bool allow_omega) {
  Graph g;
  const std::size_t n = 1 + pick(rng, max_vertices);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  const std::size_t m = pick(rng, max_bundles + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId a{static_cast<std::uint32_t>(pick(rng, n))};
    const VertexId b{static_cast<std::uint32_t>(pick(rng, n))};
    g.add_bundle("b" + std::to_string(i), a, b, random_multiplicity(rng, allow_omega));
  }
  return g;
}

Graph random_dag(Rng& rng, std::size_t max_vertices, std::size_t max_bundles) {
  Graph g;
  const std::size_t n = 1 + pick(rng, max_vertices);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  if (n < 2) return g;
  const std::size_t m = pick(rng, max_bundles + 1);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t a = pick(rng, n), b = pick(rng, n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    g.add_bundle("b" + std::to_string(i), VertexId{static_cast<std::uint32_t>(a)},
                 VertexId{static_cast<std::uint32_t>(b)}, random_multiplicity(rng, false));
  }
  return g;
}

std::vector<Path> tree_paths(const Graph& tree, VertexId root) {
  std::vector<std::optional<std::vector<SignedEdge>>> words(tree.vertex_count());
  words[root.value] = std::vector<SignedEdge>{};
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    auto visit = [&](BundleId b, bool reversed) {
      const EdgeBundle& eb = tree.bundle(b);
      const VertexId w = reversed ? eb.origin : eb.terminus;
      if (words[w.value]) return;
      auto word = *words[v.value];
      word.push_back(SignedEdge{EdgeInstance{b, 0}, reversed});
      words[w.value] = word;
      queue.push_back(w);
    };
    for (BundleId b : tree.out_bundles(v)) visit(b, false);
    for (BundleId b : tree.in_bundles(v)) visit(b, true);
  }
  std::vector<Path> out;
  for (std::uint32_t i = 0; i < tree.vertex_count(); ++i)
    out.push_back(words[i] ? Path::from_word(tree, root, *words[i]) : Path::unit(VertexId{i}));
  return out;
}

std::set<std::uint32_t> cone(const Graph& tree, VertexId apex, const std::vector<EdgeInstance>& excluded) {
  std::set<std::uint32_t> out{apex.value};
  std::deque<VertexId> queue;
  for (BundleId b : tree.out_bundles(apex)) {
    if (std::find(excluded.begin(), excluded.end(), EdgeInstance{b, 0}) != excluded.end()) continue;
    const VertexId t = tree.bundle(b).terminus;
    if (out.insert(t.value).second) queue.push_back(t);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (BundleId b : tree.out_bundles(v)) {
      const VertexId t = tree.bundle(b).terminus;
      if (out.insert(t.value).second) queue.push_back(t);
    }
  }
  return out;
}

TreeSample random_ring(const Fiber& t, const std::vector<Path>& paths, Rng& rng, std::size_t max_blocks) {
  const Graph& g = t.graph();
  TreeSample out;
  const std::size_t k = pick(rng, max_blocks + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId x{static_cast<std::uint32_t>(pick(rng, g.vertex_count()))};
    std::vector<EdgeInstance> excluded;
    for (BundleId b : g.out_bundles(x))
      if (coin(rng)) excluded.push_back(EdgeInstance{b, 0});
    out.set = ring_union(t, out.set, ring_of(make_basic(t, paths[x.value], excluded)));
    const auto c = cone(g, x, excluded);
    out.members.insert(c.begin(), c.end());
  }
  return out;
}

bool is_invariant(const Graph& g, const Invariant& inv) {
  auto in_n = [&](VertexId v) { return inv.members.contains(v.value); };
  auto f_of = [&](VertexId v) -> std::vector<EdgeInstance> {
    auto it = inv.excluded.find(v);
    return it == inv.excluded.end() ? std::vector<EdgeInstance>{} : it->second;
  };
  for (const auto& [v, f] : inv.excluded) {
    if (!in_n(v) && !f.empty()) return false;
    for (EdgeInstance e : f)
      if (!g.valid(e) || g.origin(e) != v) return false;
  }
  for (VertexId u : g.vertices()) {
    bool finite_valence = true;
    for (BundleId b : g.out_bundles(u))
      if (g.bundle(b).multiplicity.is_omega()) finite_valence = false;
    const auto f = f_of(u);
    if (in_n(u)) {
      if (finite_valence && !f.empty()) return false;
      for (BundleId b : g.out_bundles(u)) {
        const EdgeBundle& eb = g.bundle(b);
        std::uint64_t excluded_here = 0;
        for (EdgeInstance e : f)
          if (e.bundle == b) ++excluded_here;
        const bool some_kept = eb.multiplicity.is_omega() || excluded_here < eb.multiplicity.count();
        if (some_kept && !(in_n(eb.terminus) && f_of(eb.terminus).empty())) return false;
        if (excluded_here > 0 && in_n(eb.terminus) && f_of(eb.terminus).empty()) return false;
      }
    }
    if (finite_valence && !g.out_bundles(u).empty() && !in_n(u)) {
      bool all_clean = true;
      for (BundleId b : g.out_bundles(u)) {
        const VertexId t = g.bundle(b).terminus;
        if (!in_n(t) || !f_of(t).empty()) all_clean = false;
      }
      if (all_clean) return false;
    }
  }
  return true;
}

std::vector<Invariant> all_invariants(const Graph& g, std::uint64_t omega_bound) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<EdgeInstance>> candidates(n);
  for (VertexId u : g.vertices())
    for (BundleId b : g.out_bundles(u)) {
      const Multiplicity& m = g.bundle(b).multiplicity;
      const std::uint64_t k = m.is_omega() ? omega_bound : m.count();
      for (std::uint64_t i = 0; i < k; ++i) candidates[u.value].push_back(EdgeInstance{b, i});
    }
  std::vector<Invariant> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> members;
    std::size_t bits = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        members.push_back(VertexId{i});
        bits += candidates[i].size();
      }
    if (bits > 22) throw std::runtime_error("oracle: too many exclusion candidates");
    for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << bits); ++fm) {
      Invariant inv = Invariant::empty(g);
      std::size_t bit = 0;
      for (VertexId u : members) {
        inv.members.insert(u.value);
        std::vector<EdgeInstance> f;
        for (EdgeInstance e : candidates[u.value])
          if (fm >> bit++ & 1U) f.push_back(e);
        if (!f.empty()) inv.excluded[u] = f;
      }
      if (oracle::is_invariant(g, inv)) out.push_back(inv);
    }
  }
  return out;
}

std::uint64_t paths_into(const Graph& g, VertexId u) {
  std::map<std::uint32_t, std::uint64_t> memo;
  std::function<std::uint64_t(VertexId)> from = [&](VertexId x) -> std::uint64_t {
    if (auto it = memo.find(x.value); it != memo.end()) return it->second;
    std::uint64_t total = x == u ? 1 : 0;
    for (BundleId b : g.out_bundles(x)) total += g.bundle(b).multiplicity.count() * from(g.bundle(b).terminus);
    return memo[x.value] = total;
  };
  std::uint64_t sum = 0;
  for (VertexId x : g.vertices()) sum += from(x);
  return sum;
}

Path random_walk(const Graph& g, Rng& rng, VertexId v, std::size_t max_len, std::uint64_t omega_instances) {
  const std::size_t len = pick(rng, max_len + 1);
  std::vector<SignedEdge> word;
  VertexId at = v;
  for (std::size_t step = 0; step < len; ++step) {
    std::vector<SignedEdge> options;
    auto add = [&](BundleId b, bool reversed) {
      const Multiplicity& m = g.bundle(b).multiplicity;
      const std::uint64_t k = m.is_omega() ? omega_instances : m.count();
      for (std::uint64_t i = 0; i < k; ++i) {
        const SignedEdge e{EdgeInstance{b, i}, reversed};
        if (!word.empty() && e == word.back().inverse()) continue;
        options.push_back(e);
      }
    };
    for (BundleId b : g.out_bundles(at)) add(b, false);
    for (BundleId b : g.in_bundles(at)) add(b, true);
    if (options.empty()) break;
    const SignedEdge e = options[pick(rng, options.size())];
    word.push_back(e);
    at = g.terminus(e);
  }
  return Path::from_word(g, v, word);
}

BoundaryPoint random_point(const Graph& g, Rng& rng, VertexId v, std::size_t max_len) {
  const Path head = random_walk(g, rng, v, max_len);
  std::vector<SignedEdge> walk;
  std::map<std::uint32_t, std::size_t> seen;
  VertexId at = head.terminus();
  for (;;) {
    if (auto it = seen.find(at.value); it != seen.end()) {
      const std::vector<SignedEdge> stem(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(it->second));
      const std::vector<SignedEdge> cyc(walk.begin() + static_cast<std::ptrdiff_t>(it->second), walk.end());
      return BoundaryPoint::lasso(g, head * Path::from_word(g, head.terminus(), stem), Path::from_word(g, at, cyc));
    }
    const Delta1 d = g.delta1(at);
    if (d.empty() || (d.infinite() && coin(rng))) return BoundaryPoint::finite(head * Path::from_word(g, head.terminus(), walk));
    seen[at.value] = walk.size();
    const auto options = d.truncated(3);
    const EdgeInstance e = options[pick(rng, options.size())];
    walk.push_back(SignedEdge{e, false});
    at = g.terminus(e);
  }
}

std::vector<StandardForm> all_standard_forms(const Graph& g, const Path& alpha, const BoundaryPoint& y) {
  std::vector<StandardForm> out;
  const std::size_t k = alpha.length();
  for (std::size_t r = 0; r <= k; ++r) {
    if (y.length() && r > *y.length()) break;
    std::vector<SignedEdge> b2;
    for (std::size_t i = 0; i < r; ++i) b2.push_back(y.letter(i));
    bool matches = true;
    for (std::size_t i = 0; i < r; ++i)
      if (!(alpha[k - 1 - i] == b2[i].inverse())) matches = false;
    if (!matches) continue;
    const std::vector<SignedEdge> b1(alpha.word().begin(), alpha.word().begin() + static_cast<std::ptrdiff_t>(k - r));
    const BoundaryPoint x = y.drop(g, r);
    std::optional<SignedEdge> x_first;
    if (!(x.is_finite() && x.path().is_unit())) x_first = x.letter(0);
    if (!b1.empty() && x_first && b1.back() == x_first->inverse()) continue;
    if (!b2.empty() && x_first && b2.back() == x_first->inverse()) continue;
    if (!b1.empty() && !b2.empty() && b1.back() == b2.back()) continue;
    out.push_back(StandardForm{Path::from_word(g, alpha.origin(), b1), Path::from_word(g, y.origin(), b2), x});
  }
  return out;
}

std::vector<SimpleCycle> simple_cycles(const Graph& g) {
  std::vector<SimpleCycle> out;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t s = 0; s < n; ++s) {
    // Extend walks from s through vertices above s; close when back at s.
    std::vector<std::pair<std::vector<BundleId>, std::vector<VertexId>>> stack{{{}, {VertexId{s}}}};
    while (!stack.empty()) {
      auto [bundles, verts] = stack.back();
      stack.pop_back();
      for (BundleId b : g.out_bundles(verts.back())) {
        const VertexId t = g.bundle(b).terminus;
        if (t.value == s) {
          auto bb = bundles;
          bb.push_back(b);
          out.push_back(SimpleCycle{bb, verts});
          continue;
        }
        if (t.value < s || std::find(verts.begin(), verts.end(), t) != verts.end()) continue;
        auto bb = bundles;
        auto vv = verts;
        bb.push_back(b);
        vv.push_back(t);
        stack.emplace_back(bb, vv);
      }
    }
  }
  return out;
}

std::vector<std::vector<bool>> closure(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::uint32_t b = 0; b < g.bundle_count(); ++b) r[g.bundle(BundleId{b}).origin.value][g.bundle(BundleId{b}).terminus.value] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

CycleTypes cycle_types(const Graph& g) {
  CycleTypes out;
  const auto reach = closure(g);
  for (const SimpleCycle& c : simple_cycles(g)) {
    out.any = true;
    bool has_exit = false, returns = false;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      for (BundleId b : g.out_bundles(c.vertices[i])) {
        const EdgeBundle& eb = g.bundle(b);
        const bool other_copies = eb.multiplicity.is_omega() || eb.multiplicity.count() > 1;
        if (b == c.bundles[i] && !other_copies) continue;
        has_exit = true;
        for (VertexId w : c.vertices)
          if (reach[eb.terminus.value][w.value]) returns = true;
      }
    }
    if (!has_exit) out.terminal = true;
    if (has_exit && !returns) out.transitory = true;
  }
  return out;
}

bool cofinal(const Graph& g) {
  const auto reach = closure(g);
  const std::size_t n = g.vertex_count();
  std::vector<bool> on_cycle(n, false);
  for (std::uint32_t b = 0; b < g.bundle_count(); ++b) {
    const EdgeBundle& eb = g.bundle(BundleId{b});
    if (reach[eb.terminus.value][eb.origin.value]) on_cycle[eb.origin.value] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t c = 0; c < n; ++c) {
      const VertexKind k = g.kind(VertexId{static_cast<std::uint32_t>(c)});
      if ((on_cycle[c] || k != VertexKind::Regular) && !reach[u][c]) return false;
    }
  return true;
}

}  // namespace oracle
