#include "gca/point.hpp"

#include <algorithm>

#include "gca/errors.hpp"

namespace gca {

namespace {

Path rotate_left(const Graph& g, const Path& cycle) {
  std::vector<SignedEdge> w(cycle.word().begin() + 1, cycle.word().end());
  w.push_back(cycle.front());
  return Path::from_word(g, g.terminus(cycle.front()), w);
}

Path rotate_right(const Graph& g, const Path& cycle) {
  std::vector<SignedEdge> w{cycle.back()};
  w.insert(w.end(), cycle.word().begin(), cycle.word().end() - 1);
  return Path::from_word(g, g.origin(cycle.back()), w);
}

Path primitive_root(const Graph& g, const Path& cycle) {
  const auto& w = cycle.word();
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return cycle.prefix(g, p);
  }
  return cycle;
}

Path drop_last(const Graph& g, const Path& p) { return p.prefix(g, p.length() - 1); }

}  // namespace

BoundaryPoint BoundaryPoint::finite(Path p) {
  const VertexId t = p.terminus();
  return BoundaryPoint(std::move(p), Path::unit(t));
}

BoundaryPoint BoundaryPoint::lasso(const Graph& g, const Path& stem, const Path& cycle) {
  if (cycle.is_unit()) throw DomainError("lasso cycle must be nonempty");
  if (!cycle.is_directed()) throw DomainError("lasso cycle must be directed");
  if (cycle.origin() != cycle.terminus()) throw DomainError("lasso cycle must be closed");
  if (stem.terminus() != cycle.origin()) throw DomainError("lasso stem must end where the cycle starts");
  Path s = stem;
  Path c = cycle;
  // stem letters undone by the periodic part
  while (!s.is_unit() && s.back() == c.front().inverse()) {
    s = drop_last(g, s);
    c = rotate_left(g, c);
  }
  c = primitive_root(g, c);
  while (!s.is_unit() && s.back() == c.back()) {
    s = drop_last(g, s);
    c = rotate_right(g, c);
  }
  return BoundaryPoint(std::move(s), std::move(c));
}

const Path& BoundaryPoint::path() const {
  if (is_lasso()) throw DomainError("lasso point has no finite path");
  return stem_;
}

VertexId BoundaryPoint::terminus() const { return path().terminus(); }

std::optional<std::size_t> BoundaryPoint::length() const {
  if (is_lasso()) return std::nullopt;
  return stem_.length();
}

SignedEdge BoundaryPoint::letter(std::size_t i) const {
  if (i < stem_.length()) return stem_[i];
  if (!is_lasso()) throw DomainError("letter index past the end of a finite point");
  return cycle_[(i - stem_.length()) % cycle_.length()];
}

Path BoundaryPoint::prefix(const Graph& g, std::size_t n) const {
  if (n <= stem_.length()) return stem_.prefix(g, n);
  if (!is_lasso()) return stem_;
  Path out = stem_;
  for (std::size_t i = stem_.length(); i < n; ++i) out = out.then(g, letter(i));
  return out;
}

BoundaryPoint BoundaryPoint::drop(const Graph& g, std::size_t n) const {
  if (!is_lasso()) {
    if (n > stem_.length()) throw DomainError("cannot drop past the end of a finite point");
    return finite(stem_.suffix_from(g, n));
  }
  if (n <= stem_.length()) return lasso(g, stem_.suffix_from(g, n), cycle_);
  const std::size_t k = (n - stem_.length()) % cycle_.length();
  Path c = cycle_;
  for (std::size_t i = 0; i < k; ++i) c = rotate_left(g, c);
  return lasso(g, Path::unit(c.origin()), c);
}

bool BoundaryPoint::is_directed() const { return stem_.is_directed(); }

std::size_t BoundaryPoint::directed_tail_start() const {
  std::size_t start = 0;
  for (std::size_t i = 0; i < stem_.length(); ++i)
    if (stem_[i].reversed) start = i + 1;
  return start;
}

std::string BoundaryPoint::format(const Graph& g) const {
  if (!is_lasso()) return stem_.format(g);
  return (stem_.is_unit() ? std::string() : stem_.format(g)) + "@" + cycle_.format(g);
}

BoundaryPoint BoundaryPoint::parse(const Graph& g, std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) return finite(Path::parse(g, text));
  const Path cycle = Path::parse(g, text.substr(at + 1));
  std::string_view head = text.substr(0, at);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.remove_suffix(1);
  while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front()))) head.remove_prefix(1);
  const Path stem = head.empty() ? Path::unit(cycle.origin()) : Path::parse(g, head);
  try {
    return lasso(g, stem, cycle);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::size_t cancellation_count(const Path& alpha, const BoundaryPoint& x) {
  std::size_t r = 0;
  const auto n = x.length();
  while (r < alpha.length() && (!n || r < *n) && alpha[alpha.length() - 1 - r] == x.letter(r).inverse()) ++r;
  return r;
}

BoundaryPoint act(const Graph& g, const Path& alpha, const BoundaryPoint& x) {
  if (alpha.terminus() != x.origin()) throw DomainError("path does not end at the point's origin");
  if (!x.is_lasso()) return BoundaryPoint::finite(alpha * x.path());
  // Unroll enough periods that cancellation stays inside the unrolled part.
  const std::size_t periods = alpha.length() / x.cycle().length() + 1;
  Path unrolled = x.stem();
  for (std::size_t i = 0; i < periods; ++i) unrolled = unrolled * x.cycle();
  return BoundaryPoint::lasso(g, alpha * unrolled, x.cycle());
}

}  // namespace gca
