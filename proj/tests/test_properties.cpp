#include <random>

#include "codedist/constructions.hpp"
#include "codedist/errors.hpp"
#include "codedist/invariants.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace codedist;
using testing_support::random_code;
using testing_support::to_oracle;

namespace {

using V = std::vector<std::size_t>;

/// Ambients small enough for complete profiles.
std::vector<Ambient> ambients() {
    const auto f2 = Field::get(2, 1), f3 = Field::get(3, 1), f4 = Field::get(2, 2);
    return {Ambient::hamming(f2, 4), Ambient::hamming(f2, 5), Ambient::hamming(f2, 6), Ambient::hamming(f3, 4),
            Ambient::hamming(f3, 5), Ambient::hamming(f4, 4), Ambient::rank(f2, 2, 2), Ambient::rank(f2, 2, 3),
            Ambient::rank(f3, 2, 2), Ambient::sum_rank(f2, {{2, 2}, {1, 1}}),
            Ambient::sum_rank(f2, {{1, 2}, {2, 1}, {1, 1}})};
}

/// A random code of a random nontrivial dimension in a cycling ambient.
LinearCode draw(std::size_t t, std::mt19937_64& rng) {
    static const auto amb = ambients();
    const Ambient& a = amb[t % amb.size()];
    std::uniform_int_distribution<std::size_t> k(1, a.dim() - 1);
    return random_code(a, k(rng), rng);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("profile identities on 500 random codes") {
    std::mt19937_64 rng(101);
    std::size_t checked = 0;
    for (std::size_t t = 0; t < 500; ++t) {
        const LinearCode c = draw(t, rng);
        Budget b;
        Analyzer an(c, b);
        const V a = values(distance_profile(an, 1, c.length()));
        const std::size_t k = c.dim(), n = c.length();
        CAPTURE(c.ambient().describe());
        CAPTURE(k);
        for (std::size_t i = 1; i < n; ++i) CHECK(a[i - 1] >= a[i]);
        CHECK(a.front() == an.max_weight());
        CHECK(a[k - 1] == an.min_distance());
        CHECK(a.back() == 1);

        const auto ceiling = singleton_profile(c, b).ceiling;
        for (std::size_t i = 0; i < n; ++i) CHECK(a[i] <= ceiling[i]);

        if (c.ambient().metric() == Metric::hamming) {
            const auto s = sld_set(c, b);
            for (std::size_t i = 0; i < k; ++i) CHECK(s.count(a[i]) == 1);
            CHECK(*s.rbegin() == a.front());
            CHECK(*s.begin() == a[k - 1]);
        }

        const V g = greedy_profile(an).values;
        for (std::size_t i = 0; i < n; ++i) CHECK(g[i] <= a[i]);
        CHECK(g.front() == a.front());
        CHECK(g[k - 1] == a[k - 1]);
        CHECK(g[k] == a[k]);
        CHECK(g.back() == a.back());

        CHECK(maximality_degree(an) == a[k - 1] - a[k]);
        ++checked;
    }
    CHECK(checked == 500);
}

TEST_CASE("profiles match the brute-force oracle") {
    std::mt19937_64 rng(103);
    const auto f2 = Field::get(2, 1), f3 = Field::get(3, 1);
    const std::vector<Ambient> amb = {Ambient::hamming(f2, 4), Ambient::hamming(f2, 5), Ambient::hamming(f3, 3),
                                      Ambient::rank(f2, 2, 2), Ambient::sum_rank(f2, {{1, 2}, {2, 1}})};
    for (std::size_t t = 0; t < 40; ++t) {
        const Ambient& a = amb[t % amb.size()];
        const LinearCode c = random_code(a, 1 + t % (a.dim() - 1), rng);
        const auto o = to_oracle(c);
        Budget b;
        CAPTURE(a.describe());
        CHECK(values(distance_profile(c, 1, c.length(), b)) == oracle::profile(o.space, o.words));
        CHECK(covering_radius(c, b) == oracle::covering_radius(o.space, o.words));
        for (std::size_t j = 1; j <= c.length() - c.dim(); ++j)
            CHECK(generalized_radius(c, j, b) == oracle::radius(o.space, o.words, j));
    }
}

TEST_CASE("supercode routes agree on random Hamming and rank codes") {
    std::mt19937_64 rng(107);
    std::size_t hamming = 0, rank_codes = 0;
    for (std::size_t t = 0; t < 220; ++t) {
        const unsigned p = t % 2 ? 3 : 2;
        const std::size_t n = 3 + t % 4;
        std::uniform_int_distribution<std::size_t> kd(1, std::min<std::size_t>(4, n - 1));
        const LinearCode c = random_code(Ambient::hamming(Field::get(p, 1), n), kd(rng), rng);
        Budget b;
        Analyzer an(c, b);
        for (std::size_t i = c.dim() + 1; i <= n; ++i) {
            const auto direct = an.supercode(i, SupercodeRoute::direct).value;
            CHECK(direct == std::min(an.min_distance(), an.radius(i - c.dim()).value));
            CHECK(direct == an.supercode(i, SupercodeRoute::radii).value);
        }
        ++hamming;
    }
    for (std::size_t t = 0; t < 30; ++t) {
        const std::size_t m = t % 2 ? 3 : 2;
        std::uniform_int_distribution<std::size_t> kd(1, m * m - 1);
        const LinearCode c = random_code(Ambient::rank(Field::get(2, 1), m, m), kd(rng), rng);
        Budget b;
        Analyzer an(c, b);
        for (std::size_t i = c.dim() + 1; i <= c.length(); ++i) {
            if (m == 3 && i > c.dim() + 2) break;
            const auto direct = an.supercode(i, SupercodeRoute::direct).value;
            CHECK(direct == std::min(an.min_distance(), an.radius(i - c.dim()).value));
        }
        ++rank_codes;
    }
    CHECK(hamming >= 200);
    CHECK(rank_codes >= 20);
}

TEST_CASE("radii are non-increasing and start at the covering radius") {
    std::mt19937_64 rng(109);
    for (std::size_t t = 0; t < 60; ++t) {
        const LinearCode c = random_code(Ambient::hamming(Field::get(2 + t % 2, 1), 6), 1 + t % 4, rng);
        Budget b;
        Analyzer an(c, b);
        CHECK(an.radius(1).value == an.covering_radius());
        for (std::size_t j = 2; j <= c.length() - c.dim(); ++j) CHECK(an.radius(j).value <= an.radius(j - 1).value);
        CHECK(an.radius(c.length() - c.dim()).value == 1);
    }
}

TEST_CASE("search strategies agree") {
    std::mt19937_64 rng(113);
    for (std::size_t t = 0; t < 80; ++t) {
        const LinearCode c = draw(t, rng);
        Budget b;
        Analyzer an(c, b);
        for (std::size_t i = 1; i <= c.dim(); ++i)
            CHECK(an.subcode(i, SearchStrategy::enumerate).value == an.subcode(i, SearchStrategy::threshold).value);
    }
}

TEST_CASE("witnesses re-verify") {
    std::mt19937_64 rng(127);
    for (std::size_t t = 0; t < 80; ++t) {
        const LinearCode c = draw(t, rng);
        Budget b;
        const auto p = distance_profile(c, 1, c.length(), b);
        for (const auto& e : p.alpha) {
            const LinearCode w(c.ambient(), e.witness);
            CHECK(w.dim() == e.index);
            CHECK(min_distance(w, b) == *e.value);
            if (e.index <= c.dim()) CHECK(c.contains(w));
            else CHECK(w.contains(c));
        }
    }
}

TEST_CASE("parallel and serial profiles are identical") {
    std::mt19937_64 rng(131);
    for (std::size_t t = 0; t < 30; ++t) {
        const LinearCode c = draw(t, rng);
        Limits serial, parallel;
        parallel.workers = 4;
        Budget bs(serial), bp(parallel);
        const auto ps = distance_profile(c, 1, c.length(), bs);
        const auto pp = distance_profile(c, 1, c.length(), bp);
        REQUIRE(ps.alpha.size() == pp.alpha.size());
        for (std::size_t i = 0; i < ps.alpha.size(); ++i) {
            CHECK(ps.alpha[i].value == pp.alpha[i].value);
            CHECK(ps.alpha[i].witness == pp.alpha[i].witness);
        }
    }
}

TEST_CASE("puncturing drops each distance by at most one") {
    std::mt19937_64 rng(137);
    for (std::size_t t = 0; t < 60; ++t) {
        const LinearCode c = random_code(Ambient::hamming(Field::get(2 + t % 2, 1), 5), 1 + t % 4, rng);
        const V a = [&] { Budget b; return values(distance_profile(c, 1, 5, b)); }();
        for (std::size_t pos = 0; pos < 5; ++pos) {
            const LinearCode d = puncture(c, pos);
            if (d.dim() == 0) continue;
            Budget b;
            const V ad = values(distance_profile(d, 1, 4, b));
            for (std::size_t i = 0; i < 4; ++i) CHECK(ad[i] + 1 >= a[i]);
        }
    }
}

TEST_CASE("nesting inequalities") {
    std::mt19937_64 rng(139);
    for (std::size_t t = 0; t < 60; ++t) {
        const LinearCode d = draw(t, rng);
        if (d.dim() < 2) continue;
        std::uniform_int_distribution<std::size_t> kd(1, d.dim() - 1);
        const std::size_t kc = kd(rng);
        Matrix g(d.field(), kc, d.length());
        for (std::size_t r = 0; r < kc; ++r)
            for (std::size_t col = 0; col < d.length(); ++col) g(r, col) = d.generator()(r, col);
        const LinearCode c(d.ambient(), g);
        Budget b;
        const V ac = values(distance_profile(c, 1, c.length(), b));
        const V ad = values(distance_profile(d, 1, d.length(), b));
        for (std::size_t i = 1; i <= c.dim(); ++i) CHECK(ac[i - 1] <= ad[i - 1]);
        for (std::size_t i = d.dim(); i <= d.length(); ++i) CHECK(ac[i - 1] >= ad[i - 1]);
    }
}

TEST_CASE("nested literal pairs are not comparable in the middle range") {
    for (const char* stem : {"nested-a-", "nested-b-"}) {
        const LinearCode c = builtin(std::string(stem) + "C"), d = builtin(std::string(stem) + "D");
        REQUIRE(d.contains(c));
        Budget b;
        const V ac = values(distance_profile(c, 1, c.length(), b));
        const V ad = values(distance_profile(d, 1, d.length(), b));
        for (std::size_t i = 1; i <= c.dim(); ++i) CHECK(ac[i - 1] <= ad[i - 1]);
        for (std::size_t i = d.dim(); i <= d.length(); ++i) CHECK(ac[i - 1] >= ad[i - 1]);
    }
}

TEST_CASE("greedy generators realize the greedy profile on 100 binary codes") {
    std::mt19937_64 rng(149);
    for (std::size_t t = 0; t < 100; ++t) {
        const std::size_t n = 3 + t % 5;
        std::uniform_int_distribution<std::size_t> kd(1, n - 1);
        const LinearCode c = random_code(Ambient::hamming(Field::get(2, 1), n), kd(rng), rng);
        Budget b;
        const V g = greedy_profile(c, b).values;
        const Matrix gen = greedy_generator(c, b);
        REQUIRE(gen.rows() == c.dim());
        CHECK(LinearCode(c.ambient(), gen) == c);
        const V prefix(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(c.dim()));
        V weights;
        for (std::size_t r = 0; r < gen.rows(); ++r) weights.push_back(c.weight(gen.row(r)));
        CHECK(weights == prefix);
        CHECK(partial_distances(gen, c.ambient(), b).deltas == prefix);
        const auto lb = greedy_lower_bound(c, c.generator(), b);
        for (std::size_t i = 0; i < c.dim(); ++i) CHECK(lb.span_bound[i] <= g[i]);
    }
}

TEST_CASE("greedy chain prefixes") {
    std::mt19937_64 rng(151);
    for (std::size_t t = 0; t < 40; ++t) {
        const LinearCode c = draw(t, rng);
        Budget b;
        const auto gp = greedy_profile(c, b);
        REQUIRE(gp.chain.codes.size() == c.length());
        CHECK(LinearCode(c.ambient(), gp.chain.codes[c.dim() - 1]) == c);
        for (std::size_t j = 1; j <= c.dim(); ++j) {
            const LinearCode dj(c.ambient(), gp.chain.codes[j - 1]);
            CHECK(min_distance(dj, b) == gp.values[j - 1]);
            const V gj = greedy_profile(dj, b).values;
            for (std::size_t i = 0; i < j; ++i) CHECK(gj[i] == gp.values[i]);
        }
    }
}

TEST_CASE("exponent never exceeds the Singleton ceiling") {
    std::mt19937_64 rng(157);
    for (std::size_t t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 5;
        const auto f = Field::get(2 + t % 2, 1);
        Matrix a = testing_support::random_matrix(f, n, n, rng);
        if (rank(a) < n) continue;
        Budget b;
        const auto e = exponent(a, b);
        CHECK(e.value <= e.ceiling + 1e-12);
        CHECK(e.value >= 0.0);
    }
}

TEST_CASE("alpha_{k+1} over F_4 equals min(d_min, R_2)") {
    std::mt19937_64 rng(163);
    std::size_t checked = 0;
    for (std::size_t t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 4;
        std::uniform_int_distribution<std::size_t> kd(1, n - 1);
        const LinearCode c = random_code(Ambient::hamming(Field::get(2, 1), n), kd(rng), rng);
        Budget b;
        const std::size_t r2 = generalized_covering_radius(c, 2, b);
        CHECK(extended_distance(c, 2, c.dim() + 1, b) == std::min(min_distance(c, b), r2));
        CHECK(r2 >= covering_radius(c, b));
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("extension sandwich") {
    std::mt19937_64 rng(167);
    for (std::size_t t = 0; t < 25; ++t) {
        const std::size_t n = 3 + t % 3;
        const LinearCode c = random_code(Ambient::hamming(Field::get(2, 1), n), 1 + t % (n - 1), rng);
        Budget b;
        for (std::size_t i = 1; i <= n; ++i) {
            const auto as = asymptotic_distance(c, i, 2, b);
            const std::size_t a1 = Analyzer(c, b).alpha(i).value;
            CHECK(as.per_degree.front() == a1);
            for (auto v : as.per_degree) {
                CHECK(a1 <= v);
                CHECK(v <= as.value);
            }
            CHECK_FALSE(as.certified);
        }
        CHECK(extended_distance(c, 2, c.dim(), b) == min_distance(c, b));
        CHECK(extended_distance(c, 3, c.dim(), b) == min_distance(c, b));
    }
}

}  // TEST_SUITE
