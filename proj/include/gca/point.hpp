#ifndef GCA_POINT_HPP
#define GCA_POINT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gca/path.hpp"

namespace gca {

// A computable point of a cover fiber: either a finite reduced path, or the
// eventually periodic infinite word stem . cycle . cycle . ...
//
// Lassos are kept in a canonical form: the cycle is directed and primitive,
// stem.cycle does not cancel, and the stem is as short as possible (its last
// letter differs from the cycle's last letter). Two lassos denote the same
// infinite word iff their canonical forms are equal.
class BoundaryPoint {
 public:
  static BoundaryPoint finite(Path p);
  static BoundaryPoint lasso(const Graph& g, const Path& stem, const Path& cycle);

  bool is_lasso() const noexcept { return !cycle_.is_unit(); }
  bool is_finite() const noexcept { return cycle_.is_unit(); }
  // For a finite point this is the whole path.
  const Path& stem() const noexcept { return stem_; }
  const Path& cycle() const noexcept { return cycle_; }
  const Path& path() const;

  VertexId origin() const noexcept { return stem_.origin(); }
  // Terminus of a finite point.
  VertexId terminus() const;
  std::optional<std::size_t> length() const;

  // i-th letter of the underlying word; throws past the end of a finite word.
  SignedEdge letter(std::size_t i) const;
  Path prefix(const Graph& g, std::size_t n) const;
  // The point with its first n letters removed.
  BoundaryPoint drop(const Graph& g, std::size_t n) const;

  // Every letter directed.
  bool is_directed() const;
  // Index from which all letters are directed.
  std::size_t directed_tail_start() const;

  bool operator==(const BoundaryPoint& other) const = default;

  std::string format(const Graph& g) const;
  // "path" or "stem@cycle"; an empty stem is written "@cycle".
  static BoundaryPoint parse(const Graph& g, std::string_view text);

 private:
  BoundaryPoint(Path stem, Path cycle) : stem_(std::move(stem)), cycle_(std::move(cycle)) {}

  Path stem_;
  Path cycle_;
};

// The point alpha . x (word concatenation followed by reduction).
BoundaryPoint act(const Graph& g, const Path& alpha, const BoundaryPoint& x);

// Letters of alpha cancelled against the start of x.
std::size_t cancellation_count(const Path& alpha, const BoundaryPoint& x);

}  // namespace gca

#endif
