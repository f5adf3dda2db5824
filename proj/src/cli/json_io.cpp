#include "gca/cli/json_io.hpp"

#include "gca/errors.hpp"

namespace gca::cli {

Json to_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (auto i : s.members()) out.push_back(g.vertex_name(VertexId{i}));
  return out;
}

Json to_json(const Graph& g, const Invariant& inv) {
  Json f = Json::object();
  for (const auto& [v, edges] : inv.excluded) {
    Json list = Json::array();
    for (EdgeInstance e : edges) list.push_back(g.label(e));
    f[g.vertex_name(v)] = list;
  }
  return Json{{"N", to_json(g, inv.members)}, {"F", f}};
}

Invariant invariant_from_json(const Graph& g, const Json& j) {
  try {
    Invariant inv = Invariant::empty(g);
    for (const auto& name : j.at("N")) inv.members.insert(g.vertex(name.get<std::string>()).value);
    for (const auto& [name, list] : j.at("F").items()) {
      std::vector<EdgeInstance> edges;
      for (const auto& e : list) {
        const SignedEdge s = g.parse_edge(e.get<std::string>());
        if (s.reversed) throw ParseError("excluded edge cannot be reversed: " + e.get<std::string>());
        edges.push_back(s.instance);
      }
      inv.excluded[g.vertex(name)] = edges;
    }
    inv.normalize();
    return inv;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad invariant JSON: ") + e.what());
  }
}

Json to_json(const Graph& g, const Cycle& c) {
  Json bundles = Json::array();
  for (BundleId b : c.bundles) bundles.push_back(g.bundle(b).name);
  Json out{{"bundles", bundles}, {"kind", cycle_kind_name(c.kind)}};
  if (c.omega_instances) {
    out["instances"] = "omega";
  } else {
    out["instances"] = c.instance_count;
  }
  if (c.exit) out["exit"] = g.label(*c.exit);
  return out;
}

Json to_json(const Verdict& v) { return Json{{"holds", v.holds}, {"reason", v.reason}}; }

Json to_json(const Graph& g, const StructureReport& r) {
  Json cycles = Json::array();
  for (const Cycle& c : r.cycles) cycles.push_back(to_json(g, c));
  return Json{{"cycles", cycles},
              {"af", to_json(r.af)},
              {"locallyContractive", to_json(r.locally_contractive)},
              {"cofinal", to_json(r.cofinal)},
              {"essentiallyFree", to_json(r.essentially_free)},
              {"essentiallyPrincipal", to_json(r.essentially_principal)},
              {"simple", to_json(r.simple)},
              {"purelyInfinite", to_json(r.purely_infinite_simple)}};
}

Json to_json(const Graph& g, const QuotientData& q) {
  Json vertices = Json::array();
  for (VertexId v : q.quotient.vertices()) vertices.push_back(q.quotient.vertex_name(v));
  Json edges = Json::array();
  for (std::uint32_t i = 0; i < q.quotient.bundle_count(); ++i) edges.push_back(q.quotient.bundle(BundleId{i}).name);
  return Json{{"R", to_json(g, q.r)}, {"vertices", vertices}, {"edges", edges}, {"S", to_json(g, q.s)}};
}

Json to_json(const Graph& g, const RelationReport& r) {
  Json rels = Json::array();
  for (const RelationResult& x : r.relations) {
    Json item{{"name", x.name}, {"status", x.holds ? "pass" : "fail"}};
    if (x.witness) item["witness"] = *x.witness;
    if (!x.note.empty()) item["note"] = x.note;
    rels.push_back(item);
  }
  Json strict = Json::array();
  for (VertexId v : r.strict_vertices) strict.push_back(g.vertex_name(v));
  return Json{{"basisSize", r.basis_size}, {"exact", r.exact}, {"scope", r.scope}, {"relations", rels},
              {"strictVertices", strict}};
}

Json to_json(const Graph& g, const StandardForm& sf) {
  return Json{{"beta1", sf.beta1.format(g)},
              {"beta2", sf.beta2.format(g)},
              {"x", sf.x.format(g)},
              {"cocycle", static_cast<long long>(sf.beta1.length()) - static_cast<long long>(sf.beta2.length())}};
}

}  // namespace gca::cli
