#include <cstdlib>
#include <string_view>

#include "trineq/kernels.hpp"

namespace trineq::kernels {

#if defined(TRINEQ_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

const KernelTable* avx2_table() noexcept {
#if defined(TRINEQ_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& table = []() -> const KernelTable& {
    const char* forced = std::getenv("TRINEQ_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return table;
}

}  // namespace trineq::kernels
