// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "codedist/simd/kernels.hpp"

namespace codedist::simd {
namespace {

std::size_t count_nonzero(const Elem* v, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t c = 0, i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        const int zmask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)));
        c += 8 - static_cast<std::size_t>(std::popcount(static_cast<unsigned>(zmask)));
    }
    for (; i < n; ++i) c += v[i] != 0;
    return c;
}

void xor_into(Elem* dst, const Elem* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

void add_mod_p_into(Elem* dst, const Elem* src, std::size_t n, Elem p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p) - 1);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const __m256i s = _mm256_add_epi32(_mm256_loadu_si256(d),
                                           _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
        const __m256i ge = _mm256_cmpgt_epi32(s, vpm1);
        _mm256_storeu_si256(d, _mm256_sub_epi32(s, _mm256_and_si256(ge, vp)));
    }
    for (; i < n; ++i) {
        const Elem s = dst[i] + src[i];
        dst[i] = s >= p ? s - p : s;
    }
}

void axpy_table(Elem* dst, const Elem* src, std::size_t n, const Elem* mul_row, const Elem* add_table,
                std::uint32_t q) {
    const auto* mrow = reinterpret_cast<const int*>(mul_row);
    const auto* atab = reinterpret_cast<const int*>(add_table);
    const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i prod = _mm256_i32gather_epi32(mrow, s, 4);
        const __m256i cur = _mm256_loadu_si256(d);
        if (atab == nullptr) {
            _mm256_storeu_si256(d, _mm256_xor_si256(cur, prod));
        } else {
            const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(cur, vq), prod);
            _mm256_storeu_si256(d, _mm256_i32gather_epi32(atab, idx, 4));
        }
    }
    for (; i < n; ++i) {
        dst[i] = add_table == nullptr ? dst[i] ^ mul_row[src[i]] : add_table[std::size_t{dst[i]} * q + mul_row[src[i]]];
    }
}

// Nibble-LUT popcount over 256-bit lanes, summed with SAD.
inline __m256i popcount_epi8(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                         2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::uint64_t hsum_epi64(__m256i acc) {
    return static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
}

std::uint64_t popcount_words(const std::uint64_t* w, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256()));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(w[i]));
    return c;
}

std::uint64_t xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                           _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256()));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    return c;
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d),
                                                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i))));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

}  // namespace

const KernelSet& avx2_kernel_table() noexcept {
    static const KernelSet k{"avx2",         count_nonzero,      xor_into,  add_mod_p_into, axpy_table,
                             popcount_words, xor_popcount_words, xor_words};
    return k;
}

}  // namespace codedist::simd
