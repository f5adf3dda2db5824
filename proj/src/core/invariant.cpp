#include "gca/invariant.hpp"

#include <algorithm>

namespace gca {

namespace {
const std::vector<EdgeInstance> kNone;

bool has(const std::vector<EdgeInstance>& v, EdgeInstance e) { return std::find(v.begin(), v.end(), e) != v.end(); }
}  // namespace

const std::vector<EdgeInstance>& Invariant::excluded_at(VertexId v) const {
  auto it = excluded.find(v);
  return it == excluded.end() ? kNone : it->second;
}

void Invariant::normalize() {
  for (auto it = excluded.begin(); it != excluded.end();) {
    std::sort(it->second.begin(), it->second.end());
    it->second.erase(std::unique(it->second.begin(), it->second.end()), it->second.end());
    it = it->second.empty() ? excluded.erase(it) : std::next(it);
  }
}

bool Invariant::operator==(const Invariant& other) const {
  Invariant a = *this, b = other;
  a.normalize();
  b.normalize();
  return a.members == b.members && a.excluded == b.excluded;
}

std::string clause_name(Clause c) {
  switch (c) {
    case Clause::Malformed:
      return "malformed";
    case Clause::FiniteValence:
      return "finite-valence";
    case Clause::ExitClosure:
      return "exit-closure";
    case Clause::ExcludedTarget:
      return "excluded-target";
    case Clause::Saturation:
      return "saturation";
  }
  return "?";
}

std::optional<Violation> check_invariant(const Graph& g, const Invariant& inv) {
  auto fail = [&](Clause c, VertexId v, std::optional<EdgeInstance> e, const std::string& msg) {
    return Violation{c, v, e, msg};
  };
  if (inv.members.universe() != g.vertex_count())
    return fail(Clause::Malformed, VertexId{0}, std::nullopt, "vertex set has the wrong size");
  for (const auto& [v, f] : inv.excluded) {
    if (v.value >= g.vertex_count())
      return fail(Clause::Malformed, v, std::nullopt, "exclusions recorded at an unknown vertex");
    if (!inv.contains(v))
      return fail(Clause::Malformed, v, std::nullopt, "exclusions recorded at " + g.vertex_name(v) + " outside N");
    for (EdgeInstance e : f)
      if (!g.valid(e) || g.origin(e) != v)
        return fail(Clause::Malformed, v, e, "excluded edge does not leave " + g.vertex_name(v));
  }
  for (VertexId u : g.vertices()) {
    if (!inv.contains(u)) continue;
    if (!g.delta1(u).infinite() && !inv.excluded_at(u).empty())
      return fail(Clause::FiniteValence, u, inv.excluded_at(u).front(),
                  g.vertex_name(u) + " has finitely many exits but excludes some");
  }
  for (VertexId u : g.vertices()) {
    if (!inv.contains(u)) continue;
    const auto& fu = inv.excluded_at(u);
    for (BundleId b : g.out_bundles(u)) {
      const EdgeBundle& eb = g.bundle(b);
      // An omega bundle always has an instance outside the finite F_u.
      std::optional<EdgeInstance> kept;
      if (eb.multiplicity.is_omega()) {
        std::uint64_t i = 0;
        while (has(fu, EdgeInstance{b, i})) ++i;
        kept = EdgeInstance{b, i};
      } else {
        for (std::uint64_t i = 0; i < eb.multiplicity.count() && !kept; ++i)
          if (!has(fu, EdgeInstance{b, i})) kept = EdgeInstance{b, i};
      }
      if (!kept) continue;
      if (!inv.contains(eb.terminus))
        return fail(Clause::ExitClosure, u, kept, "exit " + g.label(*kept) + " leaves N");
      if (!inv.excluded_at(eb.terminus).empty())
        return fail(Clause::ExitClosure, u, kept,
                    "exit " + g.label(*kept) + " lands on " + g.vertex_name(eb.terminus) + ", which excludes edges");
    }
  }
  for (VertexId u : g.vertices()) {
    if (!inv.contains(u)) continue;
    for (EdgeInstance e : inv.excluded_at(u)) {
      const VertexId t = g.terminus(e);
      if (inv.contains(t) && inv.excluded_at(t).empty())
        return fail(Clause::ExcludedTarget, u, e,
                    "excluded edge " + g.label(e) + " lands on " + g.vertex_name(t) + ", which excludes nothing");
    }
  }
  for (VertexId u : g.vertices()) {
    if (inv.contains(u)) continue;
    const Delta1 d = g.delta1(u);
    if (d.infinite() || d.finite.empty()) continue;
    const bool forced = std::all_of(d.finite.begin(), d.finite.end(), [&](EdgeInstance e) {
      const VertexId t = g.terminus(e);
      return inv.contains(t) && inv.excluded_at(t).empty();
    });
    if (forced)
      return fail(Clause::Saturation, u, std::nullopt, g.vertex_name(u) + " has every exit in N but is not in N");
  }
  return std::nullopt;
}

bool is_invariant(const Graph& g, const Invariant& inv) { return !check_invariant(g, inv).has_value(); }

bool invariant_leq(const Invariant& a, const Invariant& b) {
  if (!a.members.subset_of(b.members)) return false;
  for (auto v : a.members.members()) {
    const auto& fa = a.excluded_at(VertexId{v});
    for (EdgeInstance e : b.excluded_at(VertexId{v}))
      if (!has(fa, e)) return false;
  }
  return true;
}

std::string format_invariant(const Graph& g, const Invariant& inv) {
  std::string out = "N=" + g.set_to_string(inv.members);
  if (!inv.excluded.empty()) {
    out += " F={";
    bool first = true;
    for (const auto& [v, f] : inv.excluded) {
      if (!first) out += "; ";
      first = false;
      out += g.vertex_name(v) + ":";
      for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + g.label(f[i]);
    }
    out += "}";
  }
  return out;
}

}  // namespace gca
