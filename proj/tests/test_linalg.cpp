#include <random>
#include <set>

#include "codedist/enumerate.hpp"
#include "codedist/errors.hpp"
#include "codedist/matrix.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace codedist;
using testing_support::random_matrix;

TEST_SUITE("linalg") {

TEST_CASE("rref of the identity is itself") {
    const auto f = Field::get(3, 1);
    const Matrix id = Matrix::identity(f, 4);
    const Rref r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("rref of G1 has pivots {0, 3}") {
    const auto f = Field::get(2, 1);
    const Matrix g = Matrix::from_rows(f, {{1, 1, 1, 1, 0}, {0, 0, 0, 1, 1}});
    const Rref r = rref(g);
    CHECK(r.pivots == std::vector<std::size_t>{0, 3});
    CHECK(r.matrix == Matrix::from_rows(f, {{1, 1, 1, 0, 1}, {0, 0, 0, 1, 1}}));
}

TEST_CASE("rref of the zero matrix") {
    const auto f = Field::get(5, 1);
    const Rref r = rref(Matrix(f, 3, 4));
    CHECK(r.pivots.empty());
    CHECK(r.matrix.is_zero());
    CHECK(row_basis(Matrix(f, 3, 4)).rows() == 0);
}

TEST_CASE("rref is idempotent, canonical, and the binary path matches the generic one") {
    std::mt19937_64 rng(11);
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        const auto f = Field::get(p, e);
        for (int t = 0; t < 60; ++t) {
            const Matrix m = random_matrix(f, 1 + t % 6, 2 + t % 9, rng);
            const Rref r = rref(m);
            CHECK(is_rref(r.matrix));
            CHECK(rref(r.matrix).matrix == r.matrix);
            CHECK(rref_generic(m).matrix == r.matrix);
            CHECK(rref_generic(m).pivots == r.pivots);
            // row operations do not change the canonical form
            Matrix mixed = m;
            if (m.rows() > 1) f->axpy(mixed.row(0), 1, m.row(1));
            CHECK(rref(mixed).matrix == r.matrix);
        }
    }
    // wide binary rows exercise multi-word packing
    const auto f2 = Field::get(2, 1);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = random_matrix(f2, 12, 150, rng);
        CHECK(rref(m).matrix == rref_generic(m).matrix);
    }
}

TEST_CASE("kernel examples") {
    const auto f = Field::get(2, 1);
    const Matrix k = kernel(Matrix::from_rows(f, {{1, 1, 1, 1}}));
    CHECK(k.rows() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        Elem s = 0;
        for (std::size_t c = 0; c < 4; ++c) s ^= k(r, c);
        CHECK(s == 0);
    }
    CHECK(kernel(Matrix::identity(f, 4)).rows() == 0);
}

TEST_CASE("kernel correctness and the duality involution over F_3") {
    std::mt19937_64 rng(5);
    const auto f = Field::get(3, 1);
    for (int t = 0; t < 40; ++t) {
        const Matrix g = random_matrix(f, 4, 8, rng);
        const Matrix k = kernel(g);
        CHECK(k.rows() == 8 - rank(g));
        if (k.rows() > 0) CHECK((g * k.transpose()).is_zero());
        CHECK(row_basis(kernel(k)) == row_basis(g));
    }
}

TEST_CASE("inverse and coordinates") {
    std::mt19937_64 rng(3);
    const auto f = Field::get(7, 1);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = random_matrix(f, 4, 4, rng);
        if (rank(m) < 4) {
            CHECK_THROWS_AS(inverse(m), Error);
            continue;
        }
        CHECK(m * inverse(m) == Matrix::identity(f, 4));
    }
    const Matrix g = row_basis(random_matrix(f, 3, 6, rng));
    const Rref r = rref(g);
    const std::vector<Elem> coeffs = {2, 0, 5};
    const auto v = g.combine(std::span<const Elem>(coeffs.data(), g.rows()));
    CHECK(in_rowspace(g, r.pivots, v));
    CHECK(coordinates(g, r.pivots, v) == std::vector<Elem>(coeffs.begin(), coeffs.begin() + static_cast<long>(g.rows())));
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(5, 0, 3) == 1u);
    CHECK(gaussian_binomial(3, 1, 2) == 7u);
    CHECK(gaussian_binomial(4, 2, 2) == 35u);
    CHECK(gaussian_binomial(4, 2, 9) == 7462u);
    CHECK(gaussian_binomial(3, 4, 2) == 0u);
    const auto big = gaussian_binomial(16, 5, 2);
    REQUIRE(big.has_value());
    CHECK(*big > (std::uint64_t{1} << 50));
    CHECK_FALSE(gaussian_binomial(64, 32, 2).has_value());
    CHECK(gaussian_binomial_sat(64, 32, 2) == kSaturated);
}

TEST_CASE("gaussian binomial for (16, 5, 2) trips the default budget") {
    const auto f = Field::get(2, 1);
    Limits l;
    l.budget = 100'000'000;
    Budget budget(l);
    CHECK_THROWS_AS(enumerate_subspaces(Matrix::identity(f, 16), 5, budget), BudgetExceeded);
}

TEST_CASE("enumerator exactness for k <= 5, q in {2, 3, 4}") {
    for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
        const auto f = Field::get(p, e);
        for (std::size_t k = 1; k <= 5; ++k)
            for (std::size_t i = 0; i <= k; ++i) {
                SubspaceEnumerator en(f, k, i);
                std::set<std::vector<Elem>> seen;
                std::uint64_t n = 0;
                while (en.next()) {
                    ++n;
                    REQUIRE(is_rref(en.current()));
                    REQUIRE(rank(en.current()) == i);
                    seen.insert(en.current().data());
                }
                CAPTURE(k);
                CAPTURE(i);
                CHECK(n == *gaussian_binomial(static_cast<unsigned>(k), static_cast<unsigned>(i), f->q()));
                CHECK(seen.size() == n);
                // chunked visiting covers the same subspaces
                std::uint64_t chunked = 0;
                for (std::size_t s = 0; s < en.pivot_set_count(); ++s) {
                    std::uint64_t here = 0;
                    en.visit(s, [&](const Matrix&) { ++here; });
                    CHECK(here == en.pivot_set_size(s));
                    chunked += here;
                }
                CHECK(chunked == n);
            }
    }
}

TEST_CASE("enumerate_subspaces maps into the row space") {
    const auto f = Field::get(2, 1);
    const Matrix basis = Matrix::from_rows(f, {{1, 1, 0, 0, 1}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 1}});
    Budget budget;
    auto range = enumerate_subspaces(basis, 2, budget);
    CHECK(range.count() == 7);
    const Rref rb = rref(basis);
    std::size_t n = 0;
    while (range.next()) {
        const Matrix sub = range.current();
        CHECK(sub.rows() == 2);
        for (std::size_t r = 0; r < 2; ++r) CHECK(in_rowspace(rb.matrix, rb.pivots, sub.row(r)));
        ++n;
    }
    CHECK(n == 7);
}

TEST_CASE("supercode enumerator") {
    std::mt19937_64 rng(17);
    for (unsigned p : {2u, 3u}) {
        const auto f = Field::get(p, 1);
        for (std::size_t n = 2; n <= 6; ++n)
            for (std::size_t k = 1; k < n; ++k) {
                const Rref c = rref(row_basis(random_matrix(f, k, n, rng)));
                const std::size_t kk = c.rank();
                if (kk == 0) continue;
                const Matrix code = row_basis(c.matrix);
                for (std::size_t i = kk; i <= n; ++i) {
                    Budget budget;
                    auto range = enumerate_supercodes(code, c.pivots, i, budget);
                    std::set<std::vector<Elem>> seen;
                    std::uint64_t count = 0;
                    while (range.next()) {
                        const Matrix d = range.current();
                        REQUIRE(d.rows() == i);
                        const Rref rd = rref(d);
                        for (std::size_t r = 0; r < kk; ++r) REQUIRE(in_rowspace(rd.matrix, rd.pivots, code.row(r)));
                        seen.insert(d.data());
                        ++count;
                    }
                    CHECK(count == *gaussian_binomial(static_cast<unsigned>(n - kk), static_cast<unsigned>(i - kk), p));
                    CHECK(seen.size() == count);
                    if (i == kk) CHECK(count == 1);
                }
            }
    }
}

TEST_CASE("even-weight F_2^4 has exactly one 4-dimensional supercode") {
    const auto f = Field::get(2, 1);
    const Matrix code = row_basis(kernel(Matrix::from_rows(f, {{1, 1, 1, 1}})));
    const Rref r = rref(code);
    Budget budget;
    auto range = enumerate_supercodes(code, r.pivots, 4, budget);
    REQUIRE(range.next());
    CHECK(range.current() == Matrix::identity(f, 4));
    CHECK_FALSE(range.next());
}

}  // TEST_SUITE
