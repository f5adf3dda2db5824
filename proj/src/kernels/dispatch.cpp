#include <cstdlib>
#include <string_view>

#include "gca/kernels/bitops.hpp"

namespace gca::kernels {

#if !(defined(__x86_64__) || defined(_M_X64))
const BitKernels* avx2_kernels() { return nullptr; }
#endif
#if !(defined(__aarch64__) || defined(_M_ARM64))
const BitKernels* neon_kernels() { return nullptr; }
#endif

namespace {

const BitKernels& select() {
  if (const char* env = std::getenv("GCA_KERNELS")) {
    const std::string_view want(env);
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2" && avx2_kernels() != nullptr) return *avx2_kernels();
    if (want == "neon" && neon_kernels() != nullptr) return *neon_kernels();
    if (want == "avx2" || want == "neon") return scalar_kernels();
  }
  if (const BitKernels* k = avx2_kernels()) return *k;
  if (const BitKernels* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const BitKernels& active_kernels() {
  static const BitKernels& chosen = select();
  return chosen;
}

}  // namespace gca::kernels
