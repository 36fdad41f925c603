#include <cstdlib>
#include <cstring>

#include "codedist/simd/kernels.hpp"

namespace codedist::simd {

#if defined(CODEDIST_HAVE_AVX2)
const KernelSet& avx2_kernel_table() noexcept;
#endif

const KernelSet* avx2_kernels() noexcept {
#if defined(CODEDIST_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet& active() noexcept {
    static const KernelSet& chosen = [] () -> const KernelSet& {
        const char* env = std::getenv("CODEDIST_SIMD");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
        if (const KernelSet* k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace codedist::simd
