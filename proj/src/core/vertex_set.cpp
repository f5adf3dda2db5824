#include "gca/vertex_set.hpp"

#include <bit>

#include "gca/errors.hpp"

namespace gca {

namespace {
constexpr std::size_t kBits = 64;
const kernels::BitKernels& K() { return kernels::active_kernels(); }
}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~kernels::Word{0};
  if (universe % kBits != 0 && !s.words_.empty()) s.words_.back() = (kernels::Word{1} << (universe % kBits)) - 1;
  return s;
}

bool VertexSet::contains(std::uint32_t i) const {
  if (i >= universe_) return false;
  return (words_[i / kBits] >> (i % kBits)) & 1U;
}

void VertexSet::insert(std::uint32_t i) {
  if (i >= universe_) throw InvariantBreach("VertexSet::insert out of range");
  words_[i / kBits] |= kernels::Word{1} << (i % kBits);
}

void VertexSet::erase(std::uint32_t i) {
  if (i >= universe_) return;
  words_[i / kBits] &= ~(kernels::Word{1} << (i % kBits));
}

std::size_t VertexSet::size() const { return K().popcount(words_); }
bool VertexSet::empty() const { return !K().any(words_); }

void VertexSet::check_same(const VertexSet& other) const {
  if (universe_ != other.universe_) throw InvariantBreach("VertexSet universe mismatch");
}

bool VertexSet::subset_of(const VertexSet& other) const {
  check_same(other);
  return K().subset(words_, other.words_);
}

bool VertexSet::intersects(const VertexSet& other) const { return !(*this & other).empty(); }

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same(other);
  K().or_words(words_, words_, other.words_);
  return *this;
}
VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same(other);
  K().and_words(words_, words_, other.words_);
  return *this;
}
VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same(other);
  K().andnot_words(words_, words_, other.words_);
  return *this;
}
VertexSet& VertexSet::operator^=(const VertexSet& other) {
  check_same(other);
  K().xor_words(words_, words_, other.words_);
  return *this;
}

bool VertexSet::operator==(const VertexSet& other) const {
  return universe_ == other.universe_ && K().equal(words_, other.words_);
}

std::vector<std::uint32_t> VertexSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    kernels::Word bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * kBits + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace gca
