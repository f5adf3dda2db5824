#include "gca/fock.hpp"

#include <algorithm>
#include <functional>

#include "gca/errors.hpp"

namespace gca {

std::optional<std::size_t> longest_path(const Graph& g) {
  // Longest path by memoized DFS; a vertex revisited while active closes a cycle.
  std::vector<int> state(g.vertex_count(), 0);  // 0 new, 1 active, 2 done
  std::vector<std::size_t> best(g.vertex_count(), 0);
  bool cyclic = false;
  std::function<void(VertexId)> visit = [&](VertexId v) {
    state[v.value] = 1;
    for (BundleId b : g.out_bundles(v)) {
      const VertexId t = g.bundle(b).terminus;
      if (state[t.value] == 1) {
        cyclic = true;
        continue;
      }
      if (state[t.value] == 0) visit(t);
      best[v.value] = std::max(best[v.value], best[t.value] + 1);
    }
    state[v.value] = 2;
  };
  for (VertexId v : g.vertices())
    if (state[v.value] == 0) visit(v);
  if (cyclic) return std::nullopt;
  std::size_t m = 0;
  for (std::size_t x : best) m = std::max(m, x);
  return m;
}

namespace {

std::vector<Path> all_directed_paths(const Graph& g, std::size_t depth, std::uint64_t omega_instances,
                                     std::size_t cap) {
  std::vector<Path> out;
  for (VertexId v : g.vertices()) out.push_back(Path::unit(v));
  std::size_t begin = 0;
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      const Path p = out[i];
      for (EdgeInstance e : g.delta1(p.terminus()).truncated(omega_instances)) {
        out.push_back(p.then(g, SignedEdge{e, false}));
        if (out.size() > cap) throw ResourceLimitError("path basis exceeds " + std::to_string(cap) + " paths");
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

PathBasis::PathBasis(const Graph& g, const BasisOptions& opts)
    : graph_(&g), mode_(opts.mode), s_(g.empty_set()), omega_instances_(opts.omega_instances) {
  if (mode_ == RepMode::CuntzKrieger) {
    s_ = g.sigma();
  } else if (opts.s.universe() == g.vertex_count()) {
    s_ = opts.s;
  } else if (opts.s.universe() != 0) {
    throw DomainError("S is over a different vertex set");
  }
  if (!s_.subset_of(g.sigma())) throw DomainError("S must lie inside sigma");
  const auto lp = longest_path(g);
  depth_ = opts.depth ? *opts.depth : (lp ? *lp + 1 : 4);  // one past the longest path keeps every column interior
  exact_ = lp && depth_ >= *lp && !g.has_omega();
  const VertexSet allowed = g.all_vertices() - s_;
  for (Path& p : all_directed_paths(g, depth_, omega_instances_, opts.cap))
    if (allowed.contains(p.terminus().value)) paths_.push_back(std::move(p));
  std::sort(paths_.begin(), paths_.end());
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], i);
}

std::optional<std::size_t> PathBasis::index_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeInstance> PathBasis::edges() const {
  std::vector<EdgeInstance> out;
  for (VertexId v : graph_->vertices()) {
    auto part = graph_->delta1(v).truncated(omega_instances_);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SparseOperator SparseOperator::identity(std::size_t n) {
  SparseOperator out(n);
  for (std::size_t i = 0; i < n; ++i) out.entries_.emplace(std::make_pair(i, i), Rational(1));
  return out;
}

void SparseOperator::set(std::size_t row, std::size_t col, const Rational& v) {
  if (row >= n_ || col >= n_) throw InvariantBreach("operator index out of range");
  if (v == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = v;
  }
}

Rational SparseOperator::get(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(n_);
  for (const auto& [key, v] : entries_) out.entries_.emplace(std::make_pair(key.second, key.first), v);
  return out;
}

SparseOperator SparseOperator::operator*(const SparseOperator& other) const {
  if (n_ != other.n_) throw InvariantBreach("operator size mismatch");
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> rows_of_other;
  for (const auto& [key, v] : other.entries_) rows_of_other[key.first].emplace_back(key.second, v);
  SparseOperator out(n_);
  for (const auto& [key, v] : entries_) {
    auto it = rows_of_other.find(key.second);
    if (it == rows_of_other.end()) continue;
    for (const auto& [col, w] : it->second) out.entries_[{key.first, col}] += v * w;
  }
  for (auto it = out.entries_.begin(); it != out.entries_.end();) it = it->second == 0 ? out.entries_.erase(it) : std::next(it);
  return out;
}

SparseOperator SparseOperator::operator+(const SparseOperator& other) const {
  if (n_ != other.n_) throw InvariantBreach("operator size mismatch");
  SparseOperator out = *this;
  for (const auto& [key, v] : other.entries_) out.set(key.first, key.second, out.get(key.first, key.second) + v);
  return out;
}

SparseOperator SparseOperator::operator-(const SparseOperator& other) const {
  if (n_ != other.n_) throw InvariantBreach("operator size mismatch");
  SparseOperator out = *this;
  for (const auto& [key, v] : other.entries_) out.set(key.first, key.second, out.get(key.first, key.second) - v);
  return out;
}

Generators generator_matrices(const PathBasis& basis) {
  const Graph& g = basis.graph();
  Generators gens;
  for (VertexId v : g.vertices()) gens.vertex.emplace(v, SparseOperator(basis.size()));
  for (EdgeInstance e : basis.edges()) gens.edge.emplace(e, SparseOperator(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Path& p = basis.at(i);
    gens.vertex.at(p.origin()).set(i, i, 1);
    for (BundleId b : g.in_bundles(p.origin())) {
      const Multiplicity& m = g.bundle(b).multiplicity;
      const std::uint64_t n = m.is_omega() ? basis.omega_instances() : m.count();
      for (std::uint64_t k = 0; k < n; ++k) {
        const EdgeInstance e{b, k};
        if (auto j = basis.index_of(Path::edge(g, e) * p)) gens.edge.at(e).set(*j, i, 1);
      }
    }
  }
  return gens;
}

bool RelationReport::all_hold() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationResult& r) { return r.holds; });
}

namespace {

RelationResult named_relation(std::string name) {
  RelationResult r;
  r.name = std::move(name);
  return r;
}

class Checker {
 public:
  explicit Checker(const PathBasis& b) : basis_(b) {}

  // Records the first failure of a == b on interior columns.
  void expect(RelationResult& r, const SparseOperator& a, const SparseOperator& b, const std::string& what) {
    if (!r.holds) return;
    auto col = a.first_difference(b, [&](std::size_t c) { return basis_.interior(c); });
    if (!col) return;
    r.holds = false;
    r.witness = basis_.at(*col).format(basis_.graph());
    r.note = what;
  }

  bool zero_on_interior(const SparseOperator& a) const {
    return !a.first_difference(SparseOperator(a.dim()), [&](std::size_t c) { return basis_.interior(c); });
  }

 private:
  const PathBasis& basis_;
};

}  // namespace

RelationReport verify_relations(const PathBasis& basis, RelationSet which) {
  const Graph& g = basis.graph();
  const Generators gens = generator_matrices(basis);
  const std::size_t n = basis.size();
  Checker check(basis);
  RelationReport report;
  report.basis_size = n;
  report.exact = basis.exact();
  report.scope = basis.exact() ? "all basis vectors"
                               : "basis paths of length at most " + std::to_string(basis.depth() == 0 ? 0 : basis.depth() - 1);

  auto name_e = [&](EdgeInstance e) { return g.label(e); };
  auto name_v = [&](VertexId v) { return g.vertex_name(v); };
  const SparseOperator zero(n);

  RelationResult isometries = named_relation("partial-isometries-and-projections");
  for (const auto& [e, s] : gens.edge) check.expect(isometries, s * s.adjoint() * s, s, "S_" + name_e(e) + " is not a partial isometry");
  for (const auto& [v, p] : gens.vertex) {
    check.expect(isometries, p * p, p, "P_" + name_v(v) + " is not idempotent");
    check.expect(isometries, p.adjoint(), p, "P_" + name_v(v) + " is not self-adjoint");
  }

  RelationResult orthogonal = named_relation("orthogonal-vertex-projections");
  for (const auto& [u, pu] : gens.vertex)
    for (const auto& [v, pv] : gens.vertex)
      if (u != v) check.expect(orthogonal, pu * pv, zero, "P_" + name_v(u) + " P_" + name_v(v) + " is nonzero");

  RelationResult identity = named_relation("vertex-projections-sum-to-identity");
  {
    SparseOperator sum(n);
    for (const auto& [v, p] : gens.vertex) sum = sum + p;
    check.expect(identity, sum, SparseOperator::identity(n), "sum of vertex projections");
  }

  RelationResult source = named_relation("source-projection");
  for (const auto& [e, s] : gens.edge)
    check.expect(source, s.adjoint() * s, gens.vertex.at(g.terminus(e)), "S_" + name_e(e) + "* S_" + name_e(e));

  // P_u minus the range projections of the exits of u.
  std::map<VertexId, SparseOperator> defect;
  for (const auto& [v, p] : gens.vertex) defect.emplace(v, p);
  for (const auto& [e, s] : gens.edge) {
    auto& q = defect.at(g.origin(e));
    q = q - s * s.adjoint();
  }

  if (which == RelationSet::CuntzKrieger) {
    RelationResult origin = named_relation("origin-projection-at-infinite-emitters");
    RelationResult exits = named_relation("orthogonal-exits-at-infinite-emitters");
    for (const auto& [e, s] : gens.edge) {
      if (g.kind(g.origin(e)) != VertexKind::InfiniteEmitter) continue;
      check.expect(origin, gens.vertex.at(g.origin(e)) * s, s, "P S_" + name_e(e));
      for (const auto& [f, t] : gens.edge)
        if (f != e && g.origin(f) == g.origin(e))
          check.expect(exits, s.adjoint() * t, zero, "S_" + name_e(e) + "* S_" + name_e(f));
    }
    RelationResult equality = named_relation("range-equality-at-regular-vertices");
    for (auto i : g.sigma().members())
      check.expect(equality, defect.at(VertexId{i}), zero, "at " + name_v(VertexId{i}));
    report.relations = {isometries, orthogonal, source, origin, exits, equality, identity};
  } else {
    RelationResult bound = named_relation("range-bound");
    for (const auto& [v, q] : defect) {
      check.expect(bound, q * q, q, "defect at " + name_v(v) + " is not idempotent");
      check.expect(bound, q.adjoint(), q, "defect at " + name_v(v) + " is not self-adjoint");
      if (g.kind(v) == VertexKind::Regular && !check.zero_on_interior(q)) report.strict_vertices.push_back(v);
    }
    report.relations = {isometries, orthogonal, identity, source, bound};
    if (which == RelationSet::ToeplitzWithS) {
      RelationResult equality = named_relation("range-equality-on-S");
      for (auto i : basis.s().members()) check.expect(equality, defect.at(VertexId{i}), zero, "at " + name_v(VertexId{i}));
      report.relations.push_back(equality);
    }
  }
  return report;
}

SparseOperator word_operator(const PathBasis& basis, const Path& a, const Path& b) {
  if (a.terminus() != b.terminus()) throw DomainError("word needs paths with a common terminus");
  const Graph& g = basis.graph();
  SparseOperator out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Path& r = basis.at(i);
    if (r.origin() != b.origin() || r.length() < b.length() || !(r.prefix(g, b.length()) == b)) continue;
    if (auto j = basis.index_of(a * r.suffix_from(g, b.length()))) out.set(*j, i, 1);
  }
  return out;
}

std::size_t sparse_rank(const std::vector<std::map<std::size_t, Rational>>& vectors) {
  std::map<std::size_t, std::map<std::size_t, Rational>> pivots;
  std::size_t rank = 0;
  for (auto v : vectors) {
    while (!v.empty()) {
      const auto [lead, value] = *v.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, v);
        ++rank;
        break;
      }
      const Rational factor = value / it->second.at(lead);
      for (const auto& [k, w] : it->second) {
        Rational& x = v[k];
        x -= factor * w;
        if (x == 0) v.erase(k);
      }
    }
  }
  return rank;
}

std::size_t algebra_dimension(const PathBasis& basis) {
  if (!basis.exact()) throw DomainError("algebra dimension needs an exact basis (acyclic graph, full depth, no omega)");
  const Graph& g = basis.graph();
  const auto lp = longest_path(g);
  std::map<VertexId, std::vector<Path>> by_terminus;
  for (Path& p : all_directed_paths(g, lp.value_or(0), 0, 200000)) by_terminus[p.terminus()].push_back(std::move(p));
  std::vector<std::map<std::size_t, Rational>> vectors;
  const std::size_t n = basis.size();
  for (const auto& [t, paths] : by_terminus)
    for (const Path& a : paths)
      for (const Path& b : paths) {
        std::map<std::size_t, Rational> v;
        const SparseOperator w = word_operator(basis, a, b);
        for (const auto& [key, x] : w.entries()) v.emplace(key.first * n + key.second, x);
        vectors.push_back(std::move(v));
      }
  return sparse_rank(vectors);
}

}  // namespace gca
