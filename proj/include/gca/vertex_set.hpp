#ifndef GCA_VERTEX_SET_HPP
#define GCA_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gca/kernels/bitops.hpp"

namespace gca {

// Dense bitset over a fixed universe [0, universe). Binary operations require
// equal universes. Bulk operations go through the runtime-selected kernels.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(std::uint32_t i) const;
  void insert(std::uint32_t i);
  void erase(std::uint32_t i);

  std::size_t size() const;
  bool empty() const;
  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet& operator^=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  bool operator==(const VertexSet& other) const;

  std::vector<std::uint32_t> members() const;
  std::span<const kernels::Word> words() const noexcept { return words_; }

 private:
  void check_same(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<kernels::Word> words_;
};

}  // namespace gca

#endif
