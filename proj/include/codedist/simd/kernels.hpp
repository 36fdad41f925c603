#pragma once

#include <cstddef>
#include <cstdint>

namespace codedist::simd {

using Elem = std::uint32_t;

/// One implementation of every vector inner loop. Variants must agree bit for bit with the scalar set.
struct KernelSet {
    const char* name;
    /// Number of nonzero entries (Hamming weight).
    std::size_t (*count_nonzero)(const Elem* v, std::size_t n);
    /// dst ^= src (addition in characteristic 2).
    void (*xor_into)(Elem* dst, const Elem* src, std::size_t n);
    /// dst = (dst + src) mod p, entries in [0, p).
    void (*add_mod_p_into)(Elem* dst, const Elem* src, std::size_t n, Elem p);
    /// dst[i] = add(dst[i], mul_row[src[i]]), add through add_table[a * q + b] or XOR when add_table is null.
    void (*axpy_table)(Elem* dst, const Elem* src, std::size_t n, const Elem* mul_row, const Elem* add_table,
                       std::uint32_t q);
    std::uint64_t (*popcount_words)(const std::uint64_t* w, std::size_t n);
    /// popcount(a ^ b) without materializing the sum.
    std::uint64_t (*xor_popcount_words)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
};

const KernelSet& scalar_kernels() noexcept;
/// AVX2 variant, or nullptr when it was not compiled in or the CPU lacks AVX2.
const KernelSet* avx2_kernels() noexcept;
/// Selected once: AVX2 when available unless CODEDIST_SIMD=scalar.
const KernelSet& active() noexcept;

}  // namespace codedist::simd
