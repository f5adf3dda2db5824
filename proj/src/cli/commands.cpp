#include "gca/cli/commands.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "gca/cli/corpus.hpp"
#include "gca/cli/json_io.hpp"
#include "gca/cli/limits.hpp"
#include "gca/cli/setexpr.hpp"
#include "gca/errors.hpp"

namespace gca::cli {

namespace {

struct Globals {
  bool json = false;
  std::optional<std::size_t> depth;
  std::size_t cap = 1000000;
  std::uint64_t omega_truncate = 3;
};

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// --- analyze ---------------------------------------------------------------

int cmd_analyze(const Globals& gl, const std::string& file, std::ostream& out) {
  const Graph g = load_graph(file);
  const StructureReport r = analyze(g, gl.cap);
  Json free_points = Json::object();
  if (r.essentially_free.holds) {
    for (VertexId v : g.vertices()) {
      const FreePoint fp = free_point_from(g, v, gl.cap);
      free_points[g.vertex_name(v)] = fp.finite ? fp.finite->format(g) : fp.aperiodic->describe(g, 12);
    }
  }
  if (gl.json) {
    Json j = to_json(g, r);
    j["freePoints"] = free_points;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "cycles: " << r.cycles.size() << "\n";
  for (const Cycle& c : r.cycles) out << "  " << c.path(g).format(g) << "  " << cycle_kind_name(c.kind) << "\n";
  auto line = [&](const char* name, const Verdict& v) {
    out << name << ": " << yes_no(v.holds) << "  (" << v.reason << ")\n";
  };
  line("af", r.af);
  line("locally contractive", r.locally_contractive);
  line("cofinal", r.cofinal);
  line("essentially free", r.essentially_free);
  line("essentially principal", r.essentially_principal);
  line("simple", r.simple);
  line("purely infinite simple", r.purely_infinite_simple);
  for (const auto& [v, word] : free_points.items()) out << "free point over " << v << ": " << word.get<std::string>() << "\n";
  return kExitOk;
}

// --- ideals ----------------------------------------------------------------

int cmd_ideals(const Globals& gl, const std::string& file, bool dot, std::uint64_t omega_bound, std::ostream& out) {
  const Graph g = load_graph(file);
  const InvariantFamily fam = enumerate_invariants(g, {omega_bound, gl.cap});
  const auto hasse = hasse_edges(fam.invariants);
  const StructureReport r = analyze(g, gl.cap);
  const bool applies = r.essentially_principal.holds;
  const std::string caveat =
      applies ? "" : "the graph has a terminal or transitory cycle (" + r.essentially_principal.reason +
                         "); invariants then classify only the gauge-invariant ideals";
  if (dot) {
    out << "digraph invariants {\n";
    for (std::size_t i = 0; i < fam.invariants.size(); ++i)
      out << "  n" << i << " [label=\"" << format_invariant(g, fam.invariants[i]) << "\"];\n";
    for (const auto& [a, b] : hasse) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return kExitOk;
  }
  Json invs = Json::array();
  for (const Invariant& inv : fam.invariants) {
    Json item = to_json(g, inv);
    item["quotient"] = to_json(g, quotient_data(g, inv));
    invs.push_back(item);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : hasse) edges.push_back(Json::array({a, b}));
  if (gl.json) {
    Json j{{"count", fam.invariants.size()},
           {"invariants", invs},
           {"hasse", edges},
           {"idealLatticeApplies", applies},
           {"omegaFamily", fam.omega_family},
           {"infiniteTargetExclusion", fam.infinite_target_exclusion}};
    if (!applies) j["caveat"] = caveat;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << fam.invariants.size() << " invariants\n";
  for (std::size_t i = 0; i < fam.invariants.size(); ++i) {
    const QuotientData q = quotient_data(g, fam.invariants[i]);
    out << "  [" << i << "] " << format_invariant(g, fam.invariants[i]) << "   quotient S = " << g.set_to_string(q.s)
        << "\n";
  }
  out << "covering pairs:";
  for (const auto& [a, b] : hasse) out << " " << a << "<" << b;
  out << "\n";
  if (fam.omega_family) out << "note: exclusion sets on omega bundles form an infinite family; only a truncation is listed\n";
  if (fam.infinite_target_exclusion) out << "note: some invariant excludes an edge into a member with infinitely many exits\n";
  out << "invariants classify ideals: " << yes_no(applies) << "\n";
  if (!applies) out << "caveat: " << caveat << "\n";
  return kExitOk;
}

// --- rep-verify ------------------------------------------------------------

int cmd_rep_verify(const Globals& gl, const std::string& file, const std::string& mode, const std::string& s_list,
                   std::ostream& out) {
  const Graph g = load_graph(file);
  BasisOptions bo;
  bo.depth = gl.depth;
  bo.omega_instances = gl.omega_truncate;
  bo.cap = gl.cap;
  RelationSet which = RelationSet::CuntzKrieger;
  if (mode == "ck") {
    bo.mode = RepMode::CuntzKrieger;
    if (!s_list.empty()) throw DomainError("--S only applies to --mode toeplitz");
  } else if (mode == "toeplitz") {
    bo.mode = RepMode::Toeplitz;
    bo.s = g.set_from_names(split_names(s_list));
    which = bo.s.empty() ? RelationSet::Toeplitz : RelationSet::ToeplitzWithS;
  } else {
    throw DomainError("unknown mode '" + mode + "' (ck or toeplitz)");
  }
  const PathBasis basis(g, bo);
  const RelationReport rep = verify_relations(basis, which);
  std::optional<std::size_t> dim;
  if (basis.exact()) dim = algebra_dimension(basis);
  if (gl.json) {
    Json j = to_json(g, rep);
    if (dim) j["dimension"] = *dim;
    out << j.dump(2) << "\n";
  } else {
    out << "basis: " << rep.basis_size << " paths, " << (rep.exact ? "exact" : "truncated") << "; checked on "
        << rep.scope << "\n";
    for (const RelationResult& x : rep.relations) {
      out << "  " << (x.holds ? "pass" : "FAIL") << "  " << x.name;
      if (x.witness) out << "  at " << *x.witness << " (" << x.note << ")";
      out << "\n";
    }
    if (!rep.strict_vertices.empty()) {
      out << "strict range bound at:";
      for (VertexId v : rep.strict_vertices) out << " " << g.vertex_name(v);
      out << "\n";
    }
    if (dim) out << "dimension: " << *dim << "\n";
  }
  return rep.all_hold() ? kExitOk : kExitCheckFailed;
}

// --- setcalc ---------------------------------------------------------------

// "fiber(<graph>,<vertex>)" or "tree(<file>,<root>)"
std::pair<std::string, std::string> parse_where(const std::string& where, bool& tree) {
  const auto open = where.find('(');
  const auto comma = where.rfind(',');
  if (open == std::string::npos || comma == std::string::npos || comma < open || where.back() != ')')
    throw ParseError("expected fiber(<graph>,<vertex>) or tree(<file>,<root>), got '" + where + "'");
  const std::string kind = where.substr(0, open);
  if (kind != "fiber" && kind != "tree") throw ParseError("unknown tree kind '" + kind + "'");
  tree = kind == "tree";
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  return {trim(where.substr(open + 1, comma - open - 1)), trim(where.substr(comma + 1, where.size() - comma - 2))};
}

int cmd_setcalc(const Globals& gl, const std::string& where, const std::string& expr, std::ostream& out) {
  bool tree = false;
  const auto [file, vertex] = parse_where(where, tree);
  const Graph g = load_graph(file);
  if (tree && !g.is_forest()) throw DomainError(file + " is not a tree");
  const Fiber t(g, g.vertex(vertex));
  const SetExprValue v = eval_set_expr(t, expr);
  if (gl.json) {
    Json j{{"set", format_ring(t, v.set)}, {"boundaryEmpty", boundary_empty(t, v.set)}};
    if (v.equal) {
      j["rhs"] = format_ring(t, *v.rhs);
      j["equal"] = *v.equal;
      j["boundaryEqual"] = boundary_equals(t, v.set, *v.rhs);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (v.equal) {
    out << format_ring(t, v.set) << " == " << format_ring(t, *v.rhs) << ": " << (*v.equal ? "true" : "false")
        << " (on the boundary: " << (boundary_equals(t, v.set, *v.rhs) ? "true" : "false") << ")\n";
  } else {
    out << format_ring(t, v.set) << "\n";
  }
  return kExitOk;
}

// --- standard-form / cocycle ------------------------------------------------

int cmd_standard_form(const Globals& gl, const std::string& file, const std::string& alpha, const std::string& point,
                      bool cocycle_only, std::ostream& out) {
  const Graph g = load_graph(file);
  const Path a = Path::parse(g, alpha);
  const BoundaryPoint y = BoundaryPoint::parse(g, point);
  const StandardForm sf = standard_form(g, a, y);
  const long long c = cocycle(g, a, y);
  if (gl.json) {
    Json j = to_json(g, sf);
    j["range"] = act(g, a, y).format(g);
    out << (cocycle_only ? Json{{"cocycle", c}} : j).dump(2) << "\n";
  } else if (cocycle_only) {
    out << c << "\n";
  } else {
    out << "beta1 = " << sf.beta1.format(g) << "\nbeta2 = " << sf.beta2.format(g) << "\nx = " << sf.x.format(g)
        << "\ncocycle = " << c << "\n";
  }
  return kExitOk;
}

// --- af-blocks -------------------------------------------------------------

int cmd_af_blocks(const Globals& gl, const std::string& file, const std::string& sub_file, std::size_t depth,
                  std::ostream& out) {
  const Graph g = load_graph(file);
  const Graph sub = load_graph(sub_file);
  const auto blocks = af_block_enumerate(g, sub, depth);
  Json arr = Json::array();
  for (const ArrowBlock& b : blocks) {
    const Fiber f(g, b.beta2.origin());
    if (gl.json) {
      arr.push_back(Json{{"beta1", b.beta1.format(g)}, {"beta2", b.beta2.format(g)}, {"region", format_ring(f, b.region)}});
    } else {
      out << b.beta1.format(g) << " | " << b.beta2.format(g) << "   on " << format_ring(f, b.region) << "\n";
    }
  }
  if (gl.json) {
    out << Json{{"count", blocks.size()}, {"blocks", arr}}.dump(2) << "\n";
  } else {
    out << blocks.size() << " blocks\n";
  }
  return kExitOk;
}

// --- limit-check -----------------------------------------------------------

int cmd_limit_check(const Globals& gl, const std::string& file, const std::vector<std::string>& chain_files,
                    const std::string& s_list, std::ostream& out) {
  const Graph g = load_graph(file);
  const VertexSet s = s_list.empty() ? g.sigma() : g.set_from_names(split_names(s_list));
  std::vector<LimitChain> chains;
  if (chain_files.empty()) {
    chains = auto_chains(g, s);
  } else {
    LimitChain c{"given", {}, s};
    for (const std::string& f : chain_files) c.stages.push_back(load_graph(f));
    c.stages.push_back(g);
    chains.push_back(std::move(c));
  }
  LimitOptions lo;
  lo.omega_instances = std::min<std::uint64_t>(gl.omega_truncate, 2);
  if (gl.depth) lo.sample_depth = *gl.depth;
  bool ok = true;
  Json arr = Json::array();
  for (const LimitChain& c : chains) {
    const LimitReport r = check_chain(c, lo);
    ok = ok && r.all_hold();
    Json induced = Json::array();
    for (std::size_t i = 0; i < r.induced.size(); ++i) induced.push_back(to_json(c.stages[i], r.induced[i]));
    Json checks = Json::array();
    for (const ChainCheck& x : r.checks)
      checks.push_back(Json{{"name", x.name}, {"status", x.skipped ? "skipped" : x.holds ? "pass" : "fail"}, {"detail", x.detail}});
    Json dims = Json::array();
    for (const auto& d : r.dimensions) dims.push_back(*d);
    arr.push_back(Json{{"chain", c.name}, {"stages", c.stages.size()}, {"inducedS", induced}, {"checks", checks},
                       {"dimensions", dims}});
    if (!gl.json) {
      out << "chain " << c.name << " (" << c.stages.size() << " stages)\n";
      for (std::size_t i = 0; i < r.induced.size(); ++i)
        out << "  stage " << i + 1 << ": S = " << c.stages[i].set_to_string(r.induced[i])
            << (r.dimensions.empty() ? "" : ", dimension " + std::to_string(*r.dimensions[i])) << "\n";
      for (const ChainCheck& x : r.checks)
        out << "  " << (x.skipped ? "skip" : x.holds ? "pass" : "FAIL") << "  " << x.name << (x.detail.empty() ? "" : "  " + x.detail) << "\n";
    }
  }
  if (gl.json) out << Json{{"chains", arr}, {"allPass", ok}}.dump(2) << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

// --- corpus-run ------------------------------------------------------------

int cmd_corpus_run(const Globals& gl, const std::string& dir, std::ostream& out) {
  bool ok = true;
  Json arr = Json::array();
  for (const CorpusEntry& e : load_corpus(dir)) {
    const Graph g = load_graph(e.graph_file);
    const Json actual = corpus_actual(g, {0, gl.cap});
    const auto bad = corpus_mismatches(e.expected, actual);
    ok = ok && bad.empty();
    if (gl.json) {
      arr.push_back(Json{{"name", e.name}, {"pass", bad.empty()}, {"mismatches", bad}, {"actual", actual}});
    } else {
      out << (bad.empty() ? "PASS " : "FAIL ") << e.name << (e.expected.is_null() ? " (no expectations)" : "") << "\n";
      for (const std::string& m : bad) out << "    " << m << "\n";
    }
  }
  if (gl.json) out << Json{{"entries", arr}, {"allPass", ok}}.dump(2) << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gca: combinatorics of graph algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "machine-readable output");
  app.add_option("--depth", gl.depth, "truncation depth (representations, samples)");
  app.add_option("--cap", gl.cap, "enumeration cap");
  app.add_option("--omega-truncate", gl.omega_truncate, "instances kept per omega bundle");

  std::string graph, dir, alpha, point, where, expr, mode = "ck", s_list, sub_file;
  std::vector<std::string> chain_files;
  bool dot = false;
  std::uint64_t omega_bound = 0;
  std::size_t af_depth = 2;

  auto* analyze_cmd = app.add_subcommand("analyze", "cycles and structure verdicts");
  analyze_cmd->add_option("graph", graph)->required();

  auto* ideals = app.add_subcommand("ideals", "invariant lattice");
  ideals->add_option("graph", graph)->required();
  ideals->add_flag("--dot", dot, "emit the covering diagram as DOT");
  ideals->add_option("--omega-bound", omega_bound, "omega instances allowed in exclusion sets");

  auto* rep = app.add_subcommand("rep-verify", "path-space representation relations");
  rep->add_option("graph", graph)->required();
  rep->add_option("--mode", mode, "ck or toeplitz");
  rep->add_option("--S", s_list, "comma-separated vertices of S (toeplitz mode)");

  auto* setcalc = app.add_subcommand("setcalc", "evaluate a set expression on a tree");
  setcalc->add_option("where", where, "fiber(<graph>,<vertex>) or tree(<file>,<root>)")->required();
  setcalc->add_option("expr", expr)->required();

  auto* sf = app.add_subcommand("standard-form", "standard form of a groupoid arrow");
  sf->add_option("graph", graph)->required();
  sf->add_option("alpha", alpha)->required();
  sf->add_option("point", point)->required();

  auto* co = app.add_subcommand("cocycle", "cocycle of a groupoid arrow");
  co->add_option("graph", graph)->required();
  co->add_option("alpha", alpha)->required();
  co->add_option("point", point)->required();

  auto* af = app.add_subcommand("af-blocks", "matrix-unit blocks of a finite subgraph");
  af->add_option("graph", graph)->required();
  af->add_option("--subgraph", sub_file)->required();
  af->add_option("--depth", af_depth, "path length");

  auto* lim = app.add_subcommand("limit-check", "coherence along nested subgraphs");
  lim->add_option("graph", graph)->required();
  lim->add_option("--chain", chain_files, "subgraph files, smallest first (default: three automatic chains)");
  lim->add_option("--S", s_list, "comma-separated S on the graph (default: sigma)");

  auto* corpus = app.add_subcommand("corpus-run", "check every corpus entry against its expectations");
  corpus->add_option("dir", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(gl, graph, out);
    if (*ideals) return cmd_ideals(gl, graph, dot, omega_bound, out);
    if (*rep) return cmd_rep_verify(gl, graph, mode, s_list, out);
    if (*setcalc) return cmd_setcalc(gl, where, expr, out);
    if (*sf) return cmd_standard_form(gl, graph, alpha, point, false, out);
    if (*co) return cmd_standard_form(gl, graph, alpha, point, true, out);
    if (*af) return cmd_af_blocks(gl, graph, sub_file, af_depth, out);
    if (*lim) return cmd_limit_check(gl, graph, chain_files, s_list, out);
    if (*corpus) return cmd_corpus_run(gl, dir, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantBreach& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace gca::cli
