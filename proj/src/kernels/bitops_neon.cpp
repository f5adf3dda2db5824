#include "gca/kernels/bitops.hpp"

#include <arm_neon.h>

#include <bit>

namespace gca::kernels {
namespace {

template <class VecOp, class ScalarOp>
inline void binary(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b, VecOp vop,
                   ScalarOp sop) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(dst.data() + i, vop(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i)));
  for (; i < n; ++i) dst[i] = sop(a[i], b[i]);
}

void and_neon(std::span<Word> d, std::span<const Word> a, std::span<const Word> b) {
  binary(d, a, b, [](uint64x2_t x, uint64x2_t y) { return vandq_u64(x, y); }, [](Word x, Word y) { return x & y; });
}
void or_neon(std::span<Word> d, std::span<const Word> a, std::span<const Word> b) {
  binary(d, a, b, [](uint64x2_t x, uint64x2_t y) { return vorrq_u64(x, y); }, [](Word x, Word y) { return x | y; });
}
void xor_neon(std::span<Word> d, std::span<const Word> a, std::span<const Word> b) {
  binary(d, a, b, [](uint64x2_t x, uint64x2_t y) { return veorq_u64(x, y); }, [](Word x, Word y) { return x ^ y; });
}
void andnot_neon(std::span<Word> d, std::span<const Word> a, std::span<const Word> b) {
  // vbicq(x, y) = x & ~y
  binary(d, a, b, [](uint64x2_t x, uint64x2_t y) { return vbicq_u64(x, y); }, [](Word x, Word y) { return x & ~y; });
}

std::size_t popcount_neon(std::span<const Word> a) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2) {
    const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a.data() + i)));
    total += vaddvq_u8(bytes);
  }
  for (; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool any_neon(std::span<const Word> a) {
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2)
    if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(a.data() + i))) != 0) return true;
  for (; i < a.size(); ++i)
    if (a[i] != 0) return true;
  return false;
}

bool equal_neon(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2) {
    const uint64x2_t d = veorq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(d)) != 0) return false;
  }
  for (; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset_neon(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + 2 <= a.size(); i += 2) {
    const uint64x2_t d = vbicq_u64(vld1q_u64(a.data() + i), vld1q_u64(b.data() + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(d)) != 0) return false;
  }
  for (; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

const BitKernels kNeon{
    "neon",  and_neon, or_neon,    xor_neon,   andnot_neon,
    popcount_neon, any_neon, equal_neon, subset_neon,
};

}  // namespace

const BitKernels* neon_kernels() { return &kNeon; }

}  // namespace gca::kernels
