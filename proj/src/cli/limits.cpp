#include "gca/cli/limits.hpp"

#include <algorithm>
#include <numeric>

#include "gca/errors.hpp"
#include "gca/fock.hpp"
#include "gca/morphism.hpp"

namespace gca::cli {

bool LimitReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const ChainCheck& c) { return c.holds; });
}

Graph subgraph(const Graph& g, const VertexSet& vertices, const std::vector<BundleId>& bundles) {
  VertexSet keep = vertices;
  for (BundleId b : bundles) {
    keep.insert(g.bundle(b).origin.value);
    keep.insert(g.bundle(b).terminus.value);
  }
  Graph out;
  for (auto i : keep.members()) out.add_vertex(g.vertex_name(VertexId{i}));
  std::vector<BundleId> sorted = bundles;
  std::sort(sorted.begin(), sorted.end());
  for (BundleId b : sorted) {
    const EdgeBundle& eb = g.bundle(b);
    out.add_bundle(eb.name, out.vertex(g.vertex_name(eb.origin)), out.vertex(g.vertex_name(eb.terminus)),
                   eb.multiplicity);
  }
  return out;
}

namespace {

bool same_graph(const Graph& a, const Graph& b) { return is_subgraph(a, b) && is_subgraph(b, a); }

// Small ring sets on every fiber of a stage: V(p), V(p; first exit),
// V(p; all finite exits), and unions of neighbours.
std::vector<std::pair<VertexId, RingSet>> samples(const Graph& g, const LimitOptions& opts) {
  std::vector<std::pair<VertexId, RingSet>> out;
  for (VertexId base : g.vertices()) {
    const Fiber t(g, base);
    std::vector<RingSet> local;
    for (const Path& p : t.ball(opts.sample_depth, opts.omega_instances)) {
      const Delta1 d = g.delta1(p.terminus());
      local.push_back(ring_of(make_basic(t, p)));
      if (!d.finite.empty()) {
        local.push_back(ring_of(make_basic(t, p, {d.finite.front()})));
        local.push_back(ring_of(make_basic(t, p, d.finite)));
      }
    }
    const std::size_t n = local.size();
    for (std::size_t i = 0; i + 1 < n; ++i) local.push_back(ring_union(t, local[i], local[i + 1]));
    for (RingSet& x : local) out.emplace_back(base, std::move(x));
  }
  return out;
}

}  // namespace

LimitReport check_chain(const LimitChain& chain, const LimitOptions& opts) {
  const auto& st = chain.stages;
  if (st.empty()) throw DomainError("empty chain");
  for (std::size_t i = 0; i + 1 < st.size(); ++i)
    if (!is_subgraph(st[i], st[i + 1]))
      throw DomainError("chain stage " + std::to_string(i + 1) + " is not a subgraph of the next");
  const Graph& e = st.back();
  if (chain.s.universe() != e.vertex_count()) throw DomainError("S is not a vertex set of the final graph");

  LimitReport report;
  report.chain = chain.name;
  const std::size_t n = st.size();
  for (std::size_t i = 0; i < n; ++i) report.induced.push_back(induced_S(st[i], e, chain.s));

  ChainCheck composition{"induced-S-composition", true, ""};
  for (std::size_t i = 0; i < n && composition.holds; ++i)
    for (std::size_t j = i; j < n && composition.holds; ++j) {
      const VertexSet direct = induced_S(st[i], e, chain.s);
      const VertexSet stepwise = induced_S(st[i], st[j], induced_S(st[j], e, chain.s));
      if (!(direct == stepwise)) {
        composition.holds = false;
        composition.detail = "stage " + std::to_string(i + 1) + " via stage " + std::to_string(j + 1) + ": " +
                             st[i].set_to_string(direct) + " vs " + st[i].set_to_string(stepwise);
      }
    }
  report.checks.push_back(composition);

  ChainCheck kernels{"kernel-commutes-with-inclusion", true, ""};
  std::size_t sampled = 0;
  for (std::size_t i = 0; i < n && kernels.holds; ++i) {
    for (const auto& [base, x] : samples(st[i], opts)) {
      const TreeMorphism a = TreeMorphism::include(st[i], e, base);
      const RingSet pushed = pushforward(a, x);
      const bool below = quotient_kernel_member(a.source(), x, report.induced[i]);
      const bool above = quotient_kernel_member(a.target(), pushed, chain.s);
      ++sampled;
      if (below != above) {
        kernels.holds = false;
        kernels.detail = "stage " + std::to_string(i + 1) + ": " + format_ring(a.source(), x);
        break;
      }
    }
  }
  if (kernels.holds) kernels.detail = std::to_string(sampled) + " sampled sets";
  report.checks.push_back(kernels);

  ChainCheck monotone{"dimension-monotone", true, ""};
  bool all_exact = true;
  for (std::size_t i = 0; i < n; ++i) {
    BasisOptions bo;
    bo.s = report.induced[i];
    const PathBasis basis(st[i], bo);
    if (!basis.exact()) {
      all_exact = false;
      break;
    }
    report.dimensions.push_back(algebra_dimension(basis));
  }
  if (!all_exact) {
    report.dimensions.clear();
    monotone.skipped = true;
    monotone.detail = "some stage is not acyclic and finite";
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (*report.dimensions[i] > *report.dimensions[i + 1]) {
        monotone.holds = false;
        monotone.detail = "stage " + std::to_string(i + 1) + " has larger dimension than the next";
      }
  }
  report.checks.push_back(monotone);
  return report;
}

std::vector<LimitChain> auto_chains(const Graph& g, const VertexSet& s) {
  const std::size_t m = g.bundle_count();
  std::vector<BundleId> order(m);
  for (std::uint32_t i = 0; i < m; ++i) order[i] = BundleId{i};

  auto by_bundles = [&](const std::string& name, const std::vector<BundleId>& seq) {
    LimitChain c{name, {}, s};
    for (std::size_t k : {m / 3, (2 * m) / 3}) {
      std::vector<BundleId> first(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k));
      Graph sub = subgraph(g, g.all_vertices(), first);
      if (c.stages.empty() || !same_graph(c.stages.back(), sub)) c.stages.push_back(std::move(sub));
    }
    if (c.stages.empty() || !same_graph(c.stages.back(), g)) c.stages.push_back(g);
    return c;
  };

  std::vector<LimitChain> out;
  out.push_back(by_bundles("bundles-in-order", order));
  std::reverse(order.begin(), order.end());
  out.push_back(by_bundles("bundles-reversed", order));

  LimitChain c{"vertex-prefixes", {}, s};
  const std::size_t nv = g.vertex_count();
  for (std::size_t k : {(nv + 1) / 2, nv - nv / 4}) {
    if (k == 0) continue;
    VertexSet vs = g.empty_set();
    for (std::uint32_t i = 0; i < k; ++i) vs.insert(i);
    std::vector<BundleId> inside;
    for (std::uint32_t b = 0; b < m; ++b)
      if (vs.contains(g.bundle(BundleId{b}).origin.value) && vs.contains(g.bundle(BundleId{b}).terminus.value))
        inside.push_back(BundleId{b});
    Graph sub = subgraph(g, vs, inside);
    if (c.stages.empty() || !same_graph(c.stages.back(), sub)) c.stages.push_back(std::move(sub));
  }
  if (c.stages.empty() || !same_graph(c.stages.back(), g)) c.stages.push_back(g);
  out.push_back(std::move(c));
  return out;
}

}  // namespace gca::cli
