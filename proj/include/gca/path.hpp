#ifndef GCA_PATH_HPP
#define GCA_PATH_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gca/graph.hpp"

namespace gca {

// Reduced word of signed edges with explicit endpoints. Length-zero paths are
// the units (one per vertex). Words are reduced on construction.
class Path {
 public:
  Path() = default;
  static Path unit(VertexId v) { return Path(v, v, {}); }
  static Path edge(const Graph& g, SignedEdge e);
  static Path edge(const Graph& g, EdgeInstance e) { return edge(g, SignedEdge{e, false}); }
  // Checks composability, then reduces.
  static Path from_word(const Graph& g, VertexId origin, const std::vector<SignedEdge>& word);

  VertexId origin() const noexcept { return origin_; }
  VertexId terminus() const noexcept { return terminus_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_unit() const noexcept { return word_.empty(); }
  const std::vector<SignedEdge>& word() const noexcept { return word_; }
  const SignedEdge& operator[](std::size_t i) const { return word_.at(i); }
  const SignedEdge& front() const { return word_.front(); }
  const SignedEdge& back() const { return word_.back(); }

  Path inverse() const;
  bool is_directed() const;
  // first n letters / everything after the first n letters
  Path prefix(const Graph& g, std::size_t n) const;
  Path suffix_from(const Graph& g, std::size_t n) const;
  // Appends one signed edge, cancelling if it undoes the last letter.
  Path then(const Graph& g, SignedEdge e) const;

  // Number of letter pairs that cancel in p*q.
  static std::size_t cancellation_count(const Path& p, const Path& q);
  friend Path operator*(const Path& p, const Path& q);

  bool operator==(const Path& other) const = default;
  // shortlex: length, then origin, then letters
  std::strong_ordering operator<=>(const Path& other) const;

  // "u" for a unit, otherwise labels joined by '.'
  std::string format(const Graph& g) const;
  // Inverse of format. A leading vertex name may be given as "u:" to fix the
  // origin of a unit or to check the origin of a word.
  static Path parse(const Graph& g, std::string_view text);

 private:
  Path(VertexId o, VertexId t, std::vector<SignedEdge> w) : origin_(o), terminus_(t), word_(std::move(w)) {}

  VertexId origin_;
  VertexId terminus_;
  std::vector<SignedEdge> word_;
};

}  // namespace gca

#endif
