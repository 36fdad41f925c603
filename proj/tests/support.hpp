#pragma once

#include <random>

#include "codedist/code.hpp"
#include "oracle.hpp"

namespace testing_support {

using namespace codedist;

inline Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> d(0, f->q() - 1);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

/// A uniformly drawn generator of full rank k.
inline LinearCode random_code(const Ambient& amb, std::size_t k, std::mt19937_64& rng) {
    while (true) {
        Matrix g = random_matrix(amb.field(), k, amb.dim(), rng);
        if (rank(g) == k) return LinearCode(amb, g);
    }
}

/// The oracle's view of a code over a prime field: its weight function and explicit codeword set.
struct OracleCode {
    oracle::Space space;
    oracle::Words words;
};

inline OracleCode to_oracle(const LinearCode& c) {
    const Ambient& a = c.ambient();
    const unsigned p = c.field()->p();
    oracle::Space s{p, a.dim(), oracle::hamming};
    if (a.metric() == Metric::rank) s.weight = oracle::rank_weight(a.blocks()[0].m, a.blocks()[0].n, p);
    if (a.metric() == Metric::sum_rank) {
        const auto blocks = a.blocks();
        s.weight = [blocks, p](const oracle::Vec& v) {
            std::size_t w = 0, off = 0;
            for (const auto& b : blocks) {
                oracle::Vec part(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + b.m * b.n));
                w += oracle::rank_weight(b.m, b.n, p)(part);
                off += b.m * b.n;
            }
            return w;
        };
    }
    std::vector<std::uint64_t> gens;
    for (std::size_t r = 0; r < c.dim(); ++r) {
        const auto row = c.generator().row(r);
        gens.push_back(s.encode(oracle::Vec(row.begin(), row.end())));
    }
    return {s, oracle::span(s, gens)};
}

}  // namespace testing_support
