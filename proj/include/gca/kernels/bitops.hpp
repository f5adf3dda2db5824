#ifndef GCA_KERNELS_BITOPS_HPP
#define GCA_KERNELS_BITOPS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace gca::kernels {

using Word = std::uint64_t;

// Word-array kernels behind VertexSet. Every variant computes exactly the same
// results as the scalar reference; inputs of unequal length are a caller bug.
// dst may alias either source.
struct BitKernels {
  std::string_view name;
  void (*and_words)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  void (*or_words)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  void (*xor_words)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  // dst = a & ~b
  void (*andnot_words)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
  std::size_t (*popcount)(std::span<const Word> a);
  bool (*any)(std::span<const Word> a);
  bool (*equal)(std::span<const Word> a, std::span<const Word> b);
  // true iff a & ~b == 0
  bool (*subset)(std::span<const Word> a, std::span<const Word> b);
};

const BitKernels& scalar_kernels();

// Null when the variant was not compiled in or the CPU lacks the feature.
const BitKernels* avx2_kernels();
const BitKernels* neon_kernels();

// Best variant for this CPU. GCA_KERNELS=scalar|avx2|neon in the environment
// overrides the choice (an unavailable request falls back to scalar).
const BitKernels& active_kernels();

}  // namespace gca::kernels

#endif
