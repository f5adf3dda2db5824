#ifndef GCA_FOCK_HPP
#define GCA_FOCK_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gca/graph.hpp"
#include "gca/path.hpp"

namespace gca {

using Rational = boost::multiprecision::cpp_rational;

// Toeplitz: basis paths may end at any vertex outside S (all of them when S
// is empty). CuntzKrieger: S is all of sigma, so paths end at sinks or
// infinite emitters.
enum class RepMode { Toeplitz, CuntzKrieger };

struct BasisOptions {
  RepMode mode = RepMode::Toeplitz;
  VertexSet s;                     // ignored in CuntzKrieger mode; empty universe means no S
  std::optional<std::size_t> depth;  // default: longest path when acyclic, else 4
  std::uint64_t omega_instances = 3;
  std::size_t cap = 200000;
};

// Directed paths indexing the standard basis of the path space.
class PathBasis {
 public:
  PathBasis(const Graph& g, const BasisOptions& opts);

  const Graph& graph() const noexcept { return *graph_; }
  RepMode mode() const noexcept { return mode_; }
  const VertexSet& s() const noexcept { return s_; }
  std::size_t depth() const noexcept { return depth_; }
  // Acyclic, deep enough for every path, and no omega truncation.
  bool exact() const noexcept { return exact_; }
  std::uint64_t omega_instances() const noexcept { return omega_instances_; }

  std::size_t size() const noexcept { return paths_.size(); }
  const std::vector<Path>& paths() const noexcept { return paths_; }
  const Path& at(std::size_t i) const { return paths_.at(i); }
  std::optional<std::size_t> index_of(const Path& p) const;
  // Columns on which relations are verified: all of them when exact,
  // otherwise paths shorter than the depth.
  bool interior(std::size_t i) const { return exact_ || paths_[i].length() + 1 <= depth_; }
  // Edge instances represented (omega bundles truncated).
  std::vector<EdgeInstance> edges() const;

 private:
  const Graph* graph_;
  RepMode mode_;
  VertexSet s_;
  std::size_t depth_;
  bool exact_;
  std::uint64_t omega_instances_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
};

// Length of the longest directed path, or nullopt when there is a cycle.
std::optional<std::size_t> longest_path(const Graph& g);

class SparseOperator {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, Rational>;

  explicit SparseOperator(std::size_t n = 0) : n_(n) {}
  static SparseOperator identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  const Entries& entries() const noexcept { return entries_; }
  void set(std::size_t row, std::size_t col, const Rational& v);
  Rational get(std::size_t row, std::size_t col) const;

  SparseOperator adjoint() const;
  SparseOperator operator*(const SparseOperator& other) const;
  SparseOperator operator+(const SparseOperator& other) const;
  SparseOperator operator-(const SparseOperator& other) const;
  bool operator==(const SparseOperator& other) const { return n_ == other.n_ && entries_ == other.entries_; }
  bool is_zero() const { return entries_.empty(); }
  // First column c with interior(c) on which this and other differ.
  template <class Pred>
  std::optional<std::size_t> first_difference(const SparseOperator& other, Pred interior) const;

 private:
  std::size_t n_;
  Entries entries_;
};

template <class Pred>
std::optional<std::size_t> SparseOperator::first_difference(const SparseOperator& other, Pred interior) const {
  std::optional<std::size_t> best;
  for (const auto& [key, value] : (*this - other).entries_)
    if (interior(key.second) && (!best || key.second < *best)) best = key.second;
  return best;
}

struct Generators {
  std::map<EdgeInstance, SparseOperator> edge;  // S_e
  std::map<VertexId, SparseOperator> vertex;    // P_u
};

// S_e maps the basis vector of p to that of e.p when the latter is in the
// basis; P_u is the diagonal projection onto paths starting at u.
Generators generator_matrices(const PathBasis& basis);

enum class RelationSet { Toeplitz, ToeplitzWithS, CuntzKrieger };

struct RelationResult {
  std::string name;
  bool holds = true;
  std::optional<std::string> witness;  // basis path where it fails
  std::string note;
};

struct RelationReport {
  std::size_t basis_size = 0;
  bool exact = false;
  std::string scope;  // which columns were checked
  std::vector<RelationResult> relations;
  std::vector<VertexId> strict_vertices;  // where the range bound is strict
  bool all_hold() const;
};

RelationReport verify_relations(const PathBasis& basis, RelationSet which);

// Rank of the span of all S_a S_b^* with a, b directed and t(a) = t(b).
// Requires an exact basis.
std::size_t algebra_dimension(const PathBasis& basis);

// Words S_a S_b^* as operators, for tests and the dimension count.
SparseOperator word_operator(const PathBasis& basis, const Path& a, const Path& b);

// Rank over the rationals of sparse vectors indexed by a single key.
std::size_t sparse_rank(const std::vector<std::map<std::size_t, Rational>>& vectors);

}  // namespace gca

#endif
