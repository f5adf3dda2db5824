#include "gca/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "gca/errors.hpp"

namespace gca {

std::string cycle_kind_name(CycleKind k) {
  switch (k) {
    case CycleKind::Terminal:
      return "terminal";
    case CycleKind::Transitory:
      return "transitory";
    case CycleKind::Returning:
      return "returning";
  }
  return "?";
}

Path Cycle::path(const Graph& g) const {
  std::vector<SignedEdge> w;
  for (BundleId b : bundles) w.push_back(SignedEdge{EdgeInstance{b, 0}, false});
  return Path::from_word(g, vertices.front(), w);
}

VertexSet cyclic_vertices(const Graph& g) {
  VertexSet out = g.empty_set();
  for (VertexId v : g.vertices())
    for (BundleId b : g.out_bundles(v))
      if (g.reachable(g.bundle(b).terminus).contains(v.value)) {
        out.insert(v.value);
        break;
      }
  return out;
}

namespace {

void classify(const Graph& g, Cycle& c) {
  VertexSet on = g.empty_set();
  for (VertexId v : c.vertices) on.insert(v.value);
  std::optional<EdgeInstance> any_exit, returning_exit;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    for (BundleId b : g.out_bundles(c.vertices[i])) {
      std::optional<EdgeInstance> exit;
      if (b != c.bundles[i]) {
        exit = EdgeInstance{b, 0};
      } else {
        const Multiplicity& m = g.bundle(b).multiplicity;
        if (m.is_omega() || m.count() > 1) exit = EdgeInstance{b, 1};
      }
      if (!exit) continue;
      if (!any_exit) any_exit = exit;
      if (!returning_exit && g.reachable(g.terminus(*exit)).intersects(on)) returning_exit = exit;
    }
  }
  if (returning_exit) {
    c.kind = CycleKind::Returning;
    c.exit = returning_exit;
  } else if (any_exit) {
    c.kind = CycleKind::Transitory;
    c.exit = any_exit;
  } else {
    c.kind = CycleKind::Terminal;
  }
}

std::optional<Cycle> first_of(const std::vector<Cycle>& cycles, CycleKind k) {
  for (const Cycle& c : cycles)
    if (c.kind == k) return c;
  return std::nullopt;
}

std::string describe(const Graph& g, const Cycle& c) { return c.path(g).format(g); }

// Shortest directed path from u to a vertex satisfying target, instance 0 throughout.
std::optional<Path> bfs_path(const Graph& g, VertexId u, const std::function<bool(VertexId)>& target) {
  std::vector<std::optional<BundleId>> via(g.vertex_count());
  VertexSet seen = g.empty_set();
  seen.insert(u.value);
  std::deque<VertexId> queue{u};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (target(x)) {
      std::vector<SignedEdge> w;
      for (VertexId y = x; via[y.value]; y = g.bundle(*via[y.value]).origin)
        w.push_back(SignedEdge{EdgeInstance{*via[y.value], 0}, false});
      std::reverse(w.begin(), w.end());
      return Path::from_word(g, u, w);
    }
    for (BundleId b : g.out_bundles(x)) {
      const VertexId y = g.bundle(b).terminus;
      if (seen.contains(y.value)) continue;
      seen.insert(y.value);
      via[y.value] = b;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Cycle> find_cycles(const Graph& g, std::size_t cap) {
  std::vector<Cycle> out;
  const std::size_t n = g.vertex_count();
  std::vector<BundleId> stack_bundles;
  std::vector<VertexId> stack_vertices;
  std::vector<bool> on_stack(n, false);
  for (std::uint32_t s = 0; s < n; ++s) {
    const VertexId start{s};
    std::function<void(VertexId)> dfs = [&](VertexId v) {
      on_stack[v.value] = true;
      stack_vertices.push_back(v);
      for (BundleId b : g.out_bundles(v)) {
        const EdgeBundle& eb = g.bundle(b);
        if (eb.terminus == start) {
          Cycle c;
          c.vertices = stack_vertices;
          c.bundles = stack_bundles;
          c.bundles.push_back(b);
          for (BundleId cb : c.bundles) {
            const Multiplicity& m = g.bundle(cb).multiplicity;
            if (m.is_omega()) {
              c.omega_instances = true;
            } else if (__builtin_mul_overflow(c.instance_count, m.count(), &c.instance_count)) {
              c.instance_count = UINT64_MAX;
            }
          }
          classify(g, c);
          out.push_back(std::move(c));
          if (out.size() > cap) throw ResourceLimitError("more than " + std::to_string(cap) + " cycles");
          continue;
        }
        if (eb.terminus.value < s || on_stack[eb.terminus.value]) continue;
        stack_bundles.push_back(b);
        dfs(eb.terminus);
        stack_bundles.pop_back();
      }
      stack_vertices.pop_back();
      on_stack[v.value] = false;
    };
    dfs(start);
  }
  return out;
}

Verdict is_af(const Graph& g, const std::vector<Cycle>& cycles) {
  if (cycles.empty()) return {true, "the graph has no cycles"};
  return {false, "cycle " + describe(g, cycles.front())};
}

Verdict is_essentially_free(const Graph& g, const std::vector<Cycle>& cycles) {
  if (auto c = first_of(cycles, CycleKind::Terminal)) return {false, "terminal cycle " + describe(g, *c)};
  return {true, "no cycle lacks an exit"};
}

Verdict is_essentially_principal(const Graph& g, const std::vector<Cycle>& cycles) {
  if (auto c = first_of(cycles, CycleKind::Terminal)) return {false, "terminal cycle " + describe(g, *c)};
  if (auto c = first_of(cycles, CycleKind::Transitory))
    return {false, "transitory cycle " + describe(g, *c) + " (no exit returns)"};
  return {true, "every cycle has an exit leading back to it"};
}

namespace {
std::optional<VertexId> vertex_without_cycle_below(const Graph& g) {
  const VertexSet cyc = cyclic_vertices(g);
  for (VertexId u : g.vertices())
    if (!g.reachable(u).intersects(cyc)) return u;
  return std::nullopt;
}
}  // namespace

Verdict is_locally_contractive(const Graph& g, const std::vector<Cycle>& cycles) {
  if (auto c = first_of(cycles, CycleKind::Terminal)) return {false, "terminal cycle " + describe(g, *c)};
  if (auto u = vertex_without_cycle_below(g))
    return {false, "no cycle is reachable from " + g.vertex_name(*u)};
  return {true, "no terminal cycles and a cycle is reachable from every vertex"};
}

Verdict is_cofinal(const Graph& g) {
  // Every infinite directed path in a finite graph eventually stays in one
  // strongly connected component containing a cycle, and each such component
  // carries a periodic path. So reaching every infinite path amounts to
  // reaching every cyclic component.
  const VertexSet cyc = cyclic_vertices(g);
  std::vector<VertexSet> components;
  VertexSet covered = g.empty_set();
  for (auto c : cyc.members()) {
    if (covered.contains(c)) continue;
    const VertexSet comp = g.reachable(VertexId{c}) & g.coreachable(VertexId{c});
    covered |= comp;
    components.push_back(comp);
  }
  const VertexSet must = g.sinks() | g.infinite_emitters();
  for (VertexId u : g.vertices()) {
    const VertexSet reach = g.reachable(u);
    for (const VertexSet& comp : components)
      if (!reach.intersects(comp))
        return {false, g.vertex_name(u) + " cannot reach the cycle through " +
                           g.vertex_name(VertexId{comp.members().front()})};
    const VertexSet missing = must - reach;
    if (!missing.empty())
      return {false, g.vertex_name(u) + " cannot reach " + g.vertex_name(VertexId{missing.members().front()})};
  }
  return {true, "every vertex reaches every cycle, sink and infinite emitter"};
}

Verdict is_simple(const Graph& g, const std::vector<Cycle>& cycles) {
  const Verdict cof = is_cofinal(g);
  if (!cof.holds) return {false, "not cofinal: " + cof.reason};
  if (auto c = first_of(cycles, CycleKind::Terminal)) return {false, "terminal cycle " + describe(g, *c)};
  return {true, "cofinal without terminal cycles"};
}

Verdict is_purely_infinite_simple(const Graph& g, const std::vector<Cycle>& cycles) {
  const Verdict s = is_simple(g, cycles);
  if (!s.holds) return {false, "not simple: " + s.reason};
  if (auto u = vertex_without_cycle_below(g))
    return {false, "no cycle is reachable from " + g.vertex_name(*u)};
  return {true, "simple, and a cycle is reachable from every vertex"};
}

StructureReport analyze(const Graph& g, std::size_t cap) {
  StructureReport r;
  r.cycles = find_cycles(g, cap);
  r.af = is_af(g, r.cycles);
  r.locally_contractive = is_locally_contractive(g, r.cycles);
  r.cofinal = is_cofinal(g);
  r.essentially_free = is_essentially_free(g, r.cycles);
  r.essentially_principal = is_essentially_principal(g, r.cycles);
  r.simple = is_simple(g, r.cycles);
  r.purely_infinite_simple = is_purely_infinite_simple(g, r.cycles);
  return r;
}

Isotropy isotropy(const BoundaryPoint& x) {
  if (!x.is_lasso()) return {};
  return Isotropy{true, x.stem() * x.cycle() * x.stem().inverse()};
}

std::vector<SignedEdge> AperiodicWord::prefix(std::size_t n) const {
  std::vector<SignedEdge> out;
  auto add = [&](const Path& p) {
    for (const SignedEdge& e : p.word()) {
      if (out.size() == n) return;
      out.push_back(e);
    }
  };
  add(alpha);
  for (std::size_t k = 1; out.size() < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      add(beta);
      add(gamma);
    }
    add(delta);
    add(gamma);
  }
  return out;
}

std::string AperiodicWord::describe(const Graph& g, std::size_t letters) const {
  std::string out;
  for (const SignedEdge& e : prefix(letters)) out += (out.empty() ? "" : ".") + g.label(e);
  return out + "...";
}

FreePoint free_point_from(const Graph& g, VertexId u, std::size_t cap) {
  const auto cycles = find_cycles(g, cap);
  if (auto c = first_of(cycles, CycleKind::Terminal))
    throw DomainError("graph has a terminal cycle " + describe(g, *c));
  FreePoint out;
  auto end = bfs_path(g, u, [&](VertexId v) { return g.kind(v) != VertexKind::Regular; });
  if (end) {
    out.finite = BoundaryPoint::finite(*end);
    return out;
  }
  const VertexSet reach = g.reachable(u);
  for (const Cycle& c : cycles) {
    if (c.kind != CycleKind::Returning || !reach.contains(c.vertices.front().value)) continue;
    const EdgeInstance f = *c.exit;
    const VertexId from = g.origin(f);
    const std::size_t i = static_cast<std::size_t>(
        std::find(c.vertices.begin(), c.vertices.end(), from) - c.vertices.begin());
    VertexSet on = g.empty_set();
    for (VertexId v : c.vertices) on.insert(v.value);
    const Path back = *bfs_path(g, g.terminus(f), [&](VertexId v) { return on.contains(v.value); });
    const std::size_t j = static_cast<std::size_t>(
        std::find(c.vertices.begin(), c.vertices.end(), back.terminus()) - c.vertices.begin());
    const std::size_t m = c.vertices.size();
    auto segment = [&](std::size_t from_i, std::size_t len) {
      std::vector<SignedEdge> w;
      for (std::size_t k = 0; k < len; ++k) w.push_back(SignedEdge{EdgeInstance{c.bundles[(from_i + k) % m], 0}, false});
      return Path::from_word(g, c.vertices[from_i], w);
    };
    AperiodicWord word;
    word.alpha = *bfs_path(g, u, [&](VertexId v) { return v == from; });
    const std::size_t span = j == i ? m : (j + m - i) % m;
    word.beta = segment(i, span);
    word.gamma = segment(j, (m - span) % m);
    word.delta = Path::edge(g, f) * back;
    out.aperiodic = word;
    return out;
  }
  throw InvariantBreach("no sink, infinite emitter or returning cycle reachable");
}

std::vector<IdealDimension> toeplitz_ideal_report(const Graph& g, const VertexSet& s) {
  if (!s.subset_of(g.sigma())) throw DomainError("S must lie inside sigma");
  const VertexSet cyc = cyclic_vertices(g);
  std::vector<IdealDimension> out;
  for (auto i : (g.sigma() - s).members()) {
    const VertexId u{i};
    const VertexSet co = g.coreachable(u);
    bool infinite = co.intersects(cyc);
    for (std::uint32_t b = 0; b < g.bundle_count() && !infinite; ++b) {
      const EdgeBundle& eb = g.bundle(BundleId{b});
      if (eb.multiplicity.is_omega() && co.contains(eb.terminus.value)) infinite = true;
    }
    if (infinite) {
      out.push_back({u, std::nullopt});
      continue;
    }
    // paths from x to u, on the acyclic part above u
    std::map<std::uint32_t, std::uint64_t> memo;
    std::function<std::uint64_t(VertexId)> paths_to = [&](VertexId x) -> std::uint64_t {
      if (auto it = memo.find(x.value); it != memo.end()) return it->second;
      std::uint64_t total = x == u ? 1 : 0;
      for (BundleId b : g.out_bundles(x)) {
        const EdgeBundle& eb = g.bundle(b);
        if (!co.contains(eb.terminus.value)) continue;
        std::uint64_t part = 0;
        if (__builtin_mul_overflow(eb.multiplicity.count(), paths_to(eb.terminus), &part) ||
            __builtin_add_overflow(total, part, &total))
          throw ResourceLimitError("path count overflows 64 bits");
      }
      memo[x.value] = total;
      return total;
    };
    std::uint64_t total = 0;
    for (auto x : co.members())
      if (__builtin_add_overflow(total, paths_to(VertexId{x}), &total))
        throw ResourceLimitError("path count overflows 64 bits");
    out.push_back({u, total});
  }
  return out;
}

}  // namespace gca
