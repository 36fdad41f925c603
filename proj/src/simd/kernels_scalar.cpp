#include <bit>

#include "codedist/simd/kernels.hpp"

namespace codedist::simd {
namespace {

std::size_t count_nonzero(const Elem* v, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += v[i] != 0;
    return c;
}

void xor_into(Elem* dst, const Elem* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void add_mod_p_into(Elem* dst, const Elem* src, std::size_t n, Elem p) {
    for (std::size_t i = 0; i < n; ++i) {
        const Elem s = dst[i] + src[i];
        dst[i] = s >= p ? s - p : s;
    }
}

void axpy_table(Elem* dst, const Elem* src, std::size_t n, const Elem* mul_row, const Elem* add_table,
                std::uint32_t q) {
    if (add_table == nullptr) {
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= mul_row[src[i]];
    } else {
        for (std::size_t i = 0; i < n; ++i) dst[i] = add_table[std::size_t{dst[i]} * q + mul_row[src[i]]];
    }
}

std::uint64_t popcount_words(const std::uint64_t* w, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(w[i]));
    return c;
}

std::uint64_t xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    return c;
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

}  // namespace

const KernelSet& scalar_kernels() noexcept {
    static const KernelSet k{"scalar",       count_nonzero,      xor_into,  add_mod_p_into, axpy_table,
                             popcount_words, xor_popcount_words, xor_words};
    return k;
}

}  // namespace codedist::simd
