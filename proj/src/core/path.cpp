#include "gca/path.hpp"

#include <algorithm>

#include "gca/errors.hpp"

namespace gca {

Path Path::edge(const Graph& g, SignedEdge e) {
  g.require(e.instance);
  return Path(g.origin(e), g.terminus(e), {e});
}

Path Path::from_word(const Graph& g, VertexId origin, const std::vector<SignedEdge>& word) {
  g.vertex_name(origin);
  std::vector<SignedEdge> reduced;
  VertexId at = origin;
  for (const SignedEdge& e : word) {
    g.require(e.instance);
    if (g.origin(e) != at) throw DomainError("word is not composable at letter " + g.label(e));
    if (!reduced.empty() && reduced.back() == e.inverse()) {
      reduced.pop_back();
    } else {
      reduced.push_back(e);
    }
    at = g.terminus(e);
  }
  return Path(origin, at, std::move(reduced));
}

Path Path::inverse() const {
  std::vector<SignedEdge> w;
  w.reserve(word_.size());
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) w.push_back(it->inverse());
  return Path(terminus_, origin_, std::move(w));
}

bool Path::is_directed() const {
  return std::none_of(word_.begin(), word_.end(), [](const SignedEdge& e) { return e.reversed; });
}

Path Path::prefix(const Graph& g, std::size_t n) const {
  if (n >= word_.size()) return *this;
  if (n == 0) return unit(origin_);
  return Path(origin_, g.terminus(word_[n - 1]), std::vector<SignedEdge>(word_.begin(), word_.begin() + n));
}

Path Path::suffix_from(const Graph& g, std::size_t n) const {
  if (n == 0) return *this;
  if (n >= word_.size()) return unit(terminus_);
  return Path(g.origin(word_[n]), terminus_, std::vector<SignedEdge>(word_.begin() + n, word_.end()));
}

Path Path::then(const Graph& g, SignedEdge e) const {
  g.require(e.instance);
  if (g.origin(e) != terminus_) throw DomainError("edge " + g.label(e) + " does not start at the path terminus");
  Path out = *this;
  if (!out.word_.empty() && out.word_.back() == e.inverse()) {
    out.word_.pop_back();
  } else {
    out.word_.push_back(e);
  }
  out.terminus_ = g.terminus(e);
  return out;
}

std::size_t Path::cancellation_count(const Path& p, const Path& q) {
  std::size_t r = 0;
  const std::size_t limit = std::min(p.length(), q.length());
  while (r < limit && p.word_[p.length() - 1 - r] == q.word_[r].inverse()) ++r;
  return r;
}

Path operator*(const Path& p, const Path& q) {
  if (p.terminus_ != q.origin_) throw DomainError("paths are not composable");
  const std::size_t r = Path::cancellation_count(p, q);
  std::vector<SignedEdge> w(p.word_.begin(), p.word_.end() - static_cast<std::ptrdiff_t>(r));
  w.insert(w.end(), q.word_.begin() + static_cast<std::ptrdiff_t>(r), q.word_.end());
  return Path(p.origin_, q.terminus_, std::move(w));
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = word_.size() <=> other.word_.size(); c != 0) return c;
  if (auto c = origin_ <=> other.origin_; c != 0) return c;
  if (auto c = terminus_ <=> other.terminus_; c != 0) return c;
  return std::lexicographical_compare_three_way(word_.begin(), word_.end(), other.word_.begin(), other.word_.end());
}

std::string Path::format(const Graph& g) const {
  if (word_.empty()) return g.vertex_name(origin_);
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += '.';
    out += g.label(word_[i]);
  }
  return out;
}

Path Path::parse(const Graph& g, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::optional<VertexId> origin;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    const std::string_view head = trim(text.substr(0, colon));
    auto v = g.find_vertex(head);
    if (!v) throw ParseError("unknown vertex '" + std::string(head) + "'");
    origin = v;
    text = trim(text.substr(colon + 1));
    if (text.empty()) return unit(*v);
  }
  if (text.empty()) throw ParseError("empty path");
  if (auto v = g.find_vertex(text)) {
    if (origin && *origin != *v) throw ParseError("unit path does not match the given origin");
    return unit(*v);
  }
  std::vector<SignedEdge> word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) dot = text.size();
    const std::string_view tok = trim(text.substr(start, dot - start));
    if (tok.empty()) throw ParseError("empty edge label in path '" + std::string(text) + "'");
    word.push_back(g.parse_edge(tok));
    start = dot + 1;
  }
  const VertexId o = g.origin(word.front());
  if (origin && *origin != o) throw ParseError("path does not start at the given origin");
  try {
    Path p = from_word(g, o, word);
    if (p.length() != word.size()) throw ParseError("path '" + std::string(text) + "' is not reduced");
    return p;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace gca
