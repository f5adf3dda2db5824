#include "gca/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "gca/errors.hpp"

namespace gca {

Multiplicity Multiplicity::finite(std::uint64_t k) {
  if (k == 0) throw DomainError("multiplicity must be at least 1");
  return Multiplicity(k, false);
}

bool Multiplicity::at_most(const Multiplicity& other) const noexcept {
  if (other.omega_) return true;
  if (omega_) return false;
  return count_ <= other.count_;
}

std::string Multiplicity::to_string() const { return omega_ ? "omega" : std::to_string(count_); }

std::vector<EdgeInstance> Delta1::truncated(std::uint64_t k) const {
  std::vector<EdgeInstance> out = finite;
  for (BundleId b : omega_bundles)
    for (std::uint64_t i = 0; i < k; ++i) out.push_back({b, i});
  std::sort(out.begin(), out.end());
  return out;
}

EdgeInstance Delta1::nth(std::uint64_t i) const {
  if (i < finite.size()) return finite[i];
  if (omega_bundles.empty()) throw DomainError("edge enumeration exhausted");
  const std::uint64_t rest = i - finite.size();
  return {omega_bundles[rest % omega_bundles.size()], rest / omega_bundles.size()};
}

VertexId Graph::add_vertex(const std::string& name) {
  if (vertex_index_.count(name) || bundle_index_.count(name)) throw ParseError("duplicate name '" + name + "'");
  const VertexId id{static_cast<std::uint32_t>(vertex_names_.size())};
  vertex_names_.push_back(name);
  out_.emplace_back();
  in_.emplace_back();
  vertex_index_.emplace(name, id);
  return id;
}

BundleId Graph::add_bundle(const std::string& name, VertexId origin, VertexId terminus, Multiplicity m) {
  if (vertex_index_.count(name) || bundle_index_.count(name)) throw ParseError("duplicate name '" + name + "'");
  if (origin.value >= vertex_count() || terminus.value >= vertex_count())
    throw DomainError("bundle endpoint out of range");
  const BundleId id{static_cast<std::uint32_t>(bundles_.size())};
  bundles_.push_back({name, origin, terminus, m});
  out_[origin.value].push_back(id);
  in_[terminus.value].push_back(id);
  bundle_index_.emplace(name, id);
  return id;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out(vertex_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = VertexId{i};
  return out;
}

const std::string& Graph::vertex_name(VertexId v) const {
  if (v.value >= vertex_count()) throw DomainError("unknown vertex id " + std::to_string(v.value));
  return vertex_names_[v.value];
}

const EdgeBundle& Graph::bundle(BundleId b) const {
  if (b.value >= bundles_.size()) throw DomainError("unknown bundle id " + std::to_string(b.value));
  return bundles_[b.value];
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<BundleId> Graph::find_bundle(std::string_view name) const {
  auto it = bundle_index_.find(name);
  if (it == bundle_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw DomainError("unknown vertex '" + std::string(name) + "'");
}

BundleId Graph::bundle_id(std::string_view name) const {
  if (auto b = find_bundle(name)) return *b;
  throw DomainError("unknown edge '" + std::string(name) + "'");
}

bool Graph::valid(EdgeInstance e) const {
  return e.bundle.value < bundles_.size() && bundles_[e.bundle.value].multiplicity.admits(e.index);
}

void Graph::require(EdgeInstance e) const {
  if (!valid(e)) throw DomainError("no such edge instance");
}

const std::vector<BundleId>& Graph::out_bundles(VertexId v) const {
  vertex_name(v);
  return out_[v.value];
}

const std::vector<BundleId>& Graph::in_bundles(VertexId v) const {
  vertex_name(v);
  return in_[v.value];
}

Delta1 Graph::delta1(VertexId v) const {
  Delta1 d;
  for (BundleId b : out_bundles(v)) {
    const Multiplicity& m = bundles_[b.value].multiplicity;
    if (m.is_omega()) {
      d.omega_bundles.push_back(b);
    } else {
      for (std::uint64_t i = 0; i < m.count(); ++i) d.finite.push_back({b, i});
    }
  }
  return d;
}

VertexKind Graph::kind(VertexId v) const {
  const auto& out = out_bundles(v);
  if (out.empty()) return VertexKind::Sink;
  for (BundleId b : out)
    if (bundles_[b.value].multiplicity.is_omega()) return VertexKind::InfiniteEmitter;
  return VertexKind::Regular;
}

namespace {
VertexSet of_kind(const Graph& g, VertexKind k) {
  VertexSet s = g.empty_set();
  for (VertexId v : g.vertices())
    if (g.kind(v) == k) s.insert(v.value);
  return s;
}
}  // namespace

VertexSet Graph::sinks() const { return of_kind(*this, VertexKind::Sink); }
VertexSet Graph::sigma() const { return of_kind(*this, VertexKind::Regular); }
VertexSet Graph::infinite_emitters() const { return of_kind(*this, VertexKind::InfiniteEmitter); }

VertexSet Graph::reachable(VertexId v) const {
  VertexSet seen = empty_set();
  std::deque<VertexId> queue{v};
  vertex_name(v);
  seen.insert(v.value);
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (BundleId b : out_[x.value]) {
      const VertexId y = bundles_[b.value].terminus;
      if (!seen.contains(y.value)) {
        seen.insert(y.value);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

VertexSet Graph::coreachable(VertexId v) const {
  VertexSet seen = empty_set();
  std::deque<VertexId> queue{v};
  vertex_name(v);
  seen.insert(v.value);
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (BundleId b : in_[x.value]) {
      const VertexId y = bundles_[b.value].origin;
      if (!seen.contains(y.value)) {
        seen.insert(y.value);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

bool Graph::has_omega() const {
  return std::any_of(bundles_.begin(), bundles_.end(), [](const EdgeBundle& b) { return b.multiplicity.is_omega(); });
}

bool Graph::is_forest() const {
  std::vector<std::uint32_t> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const EdgeBundle& b : bundles_) {
    if (b.multiplicity.is_omega() || b.multiplicity.count() > 1) return false;
    const std::uint32_t x = find(b.origin.value), y = find(b.terminus.value);
    if (x == y) return false;
    parent[x] = y;
  }
  return true;
}

std::string Graph::label(EdgeInstance e) const {
  const EdgeBundle& b = bundle(e.bundle);
  if (!b.multiplicity.is_omega() && b.multiplicity.count() == 1 && e.index == 0) return b.name;
  return b.name + "#" + std::to_string(e.index);
}

std::string Graph::label(SignedEdge e) const { return (e.reversed ? "~" : "") + label(e.instance); }

SignedEdge Graph::parse_edge(std::string_view token) const {
  SignedEdge out;
  if (!token.empty() && token.front() == '~') {
    out.reversed = true;
    token.remove_prefix(1);
  }
  std::string_view name = token;
  std::uint64_t index = 0;
  if (auto hash = token.find('#'); hash != std::string_view::npos) {
    name = token.substr(0, hash);
    const std::string digits(token.substr(hash + 1));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad edge index in '" + std::string(token) + "'");
    index = std::stoull(digits);
  }
  auto b = find_bundle(name);
  if (!b) throw ParseError("unknown edge '" + std::string(name) + "'");
  out.instance = {*b, index};
  if (!valid(out.instance)) throw ParseError("edge index out of range in '" + std::string(token) + "'");
  return out;
}

std::string Graph::set_to_string(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ",";
    out += vertex_names_.at(i);
    first = false;
  }
  return out + "}";
}

VertexSet Graph::set_from_names(const std::vector<std::string>& names) const {
  VertexSet s = empty_set();
  for (const auto& n : names) s.insert(vertex(n).value);
  return s;
}

bool is_subgraph(const Graph& sub, const Graph& super) {
  for (VertexId v : sub.vertices())
    if (!super.find_vertex(sub.vertex_name(v))) return false;
  for (std::uint32_t i = 0; i < sub.bundle_count(); ++i) {
    const EdgeBundle& b = sub.bundle(BundleId{i});
    auto other = super.find_bundle(b.name);
    if (!other) return false;
    const EdgeBundle& c = super.bundle(*other);
    if (super.vertex_name(c.origin) != sub.vertex_name(b.origin)) return false;
    if (super.vertex_name(c.terminus) != sub.vertex_name(b.terminus)) return false;
    if (!b.multiplicity.at_most(c.multiplicity)) return false;
  }
  return true;
}

}  // namespace gca
