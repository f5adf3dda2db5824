#include "gca/kernels/bitops.hpp"

#include <bit>

namespace gca::kernels {
namespace {

void and_scalar(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void or_scalar(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] | b[i];
}

void xor_scalar(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] ^ b[i];
}

void andnot_scalar(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & ~b[i];
}

std::size_t popcount_scalar(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool any_scalar(std::span<const Word> a) {
  for (Word w : a)
    if (w != 0) return true;
  return false;
}

bool equal_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

const BitKernels kScalar{
    "scalar",  and_scalar, or_scalar,    xor_scalar,   andnot_scalar,
    popcount_scalar, any_scalar, equal_scalar, subset_scalar,
};

}  // namespace

const BitKernels& scalar_kernels() { return kScalar; }

}  // namespace gca::kernels
