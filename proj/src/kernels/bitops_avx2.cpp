#include "gca/kernels/bitops.hpp"

#include <immintrin.h>

#include <bit>

namespace gca::kernels {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

template <class VecOp, class ScalarOp>
inline void binary(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b, VecOp vop,
                   ScalarOp sop) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst.data() + i, vop(load(a.data() + i), load(b.data() + i)));
  for (; i < n; ++i) dst[i] = sop(a[i], b[i]);
}

void and_avx2(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  binary(dst, a, b, [](__m256i x, __m256i y) { return _mm256_and_si256(x, y); },
         [](Word x, Word y) { return x & y; });
}

void or_avx2(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  binary(dst, a, b, [](__m256i x, __m256i y) { return _mm256_or_si256(x, y); },
         [](Word x, Word y) { return x | y; });
}

void xor_avx2(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  binary(dst, a, b, [](__m256i x, __m256i y) { return _mm256_xor_si256(x, y); },
         [](Word x, Word y) { return x ^ y; });
}

void andnot_avx2(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  // _mm256_andnot_si256(x, y) computes ~x & y
  binary(dst, a, b, [](__m256i x, __m256i y) { return _mm256_andnot_si256(y, x); },
         [](Word x, Word y) { return x & ~y; });
}

// Nibble lookup popcount (Mula): pshufb per nibble, then sad against zero.
std::size_t popcount_avx2(std::span<const Word> a) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a.data() + i);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool any_avx2(std::span<const Word> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a.data() + i);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i)
    if (a[i] != 0) return true;
  return false;
}

bool equal_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i d = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(d, d)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // testc(b, a) is 1 iff a & ~b == 0
    if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
  }
  for (; i < n; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

const BitKernels kAvx2{
    "avx2",  and_avx2, or_avx2,    xor_avx2,   andnot_avx2,
    popcount_avx2, any_avx2, equal_avx2, subset_avx2,
};

}  // namespace

const BitKernels* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace gca::kernels
