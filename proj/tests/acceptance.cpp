// Acceptance run: one PASS/FAIL line per criterion.
//
// A published value that disagrees with the library is accepted as a documented discrepancy only when
// the naive reference in oracle.hpp (or the F_4 rank check below) reproduces the library's value; the
// criterion still prints FAIL. The exit status is 0 when every failure is such a confirmed discrepancy.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "codedist/constructions.hpp"
#include "codedist/enumerate.hpp"
#include "codedist/errors.hpp"
#include "codedist/invariants.hpp"
#include "codedist/report.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace codedist;
using testing_support::random_code;
using testing_support::to_oracle;
using V = std::vector<std::size_t>;

namespace {

constexpr double kExponentTolerance = 1e-12;
constexpr double kRsSeconds = 120.0;
constexpr double kBr17Seconds = 10.0;

std::string str(const V& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }

    /// Published value against the library, with the reference value deciding a disagreement.
    void published(const std::string& what, const V& stated, const V& computed, const std::function<V()>& reference) {
        ++checks_;
        if (computed == stated) return;
        const V ref = reference();
        const std::string line = what + ": published " + str(stated) + ", computed " + str(computed);
        if (ref == computed)
            disputed_.push_back(line + " (reference agrees with computed)");
        else
            failures_.push_back(line + ", reference " + str(ref));
    }

    void run(const std::function<void(Criterion&)>& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            failures_.push_back(std::string("exception: ") + e.what());
        }
    }

    bool passed() const { return failures_.empty() && disputed_.empty(); }
    bool confirmed_only() const { return failures_.empty(); }

    void print() const {
        std::printf("%s criterion %d: %s [%zu checks]\n", passed() ? "PASS" : "FAIL", id_, title_.c_str(), checks_);
        for (const auto& f : failures_) std::printf("    mismatch: %s\n", f.c_str());
        for (const auto& d : disputed_) std::printf("    published value refuted: %s\n", d.c_str());
        std::fflush(stdout);
    }

private:
    int id_;
    std::string title_;
    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> disputed_;
};

V alphas(const LinearCode& c, std::size_t first = 1, std::size_t last = 0) {
    Budget b;
    return values(distance_profile(c, first, last ? last : c.length(), b));
}

V oracle_profile(const LinearCode& c, std::size_t last = 0) {
    const auto o = to_oracle(c);
    return oracle::profile(o.space, o.words, last);
}

LinearCode full(unsigned p, std::size_t n) { return LinearCode::full_space(Ambient::hamming(Field::get(p, 1), n)); }

/// Minimum rank over F_4 of the F_4-span of a binary rank-metric code, by plain enumeration.
std::size_t f4_min_rank(const LinearCode& c) {
    static const unsigned mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    static const unsigned inv[4] = {0, 1, 3, 2};
    const std::size_t m = c.ambient().blocks()[0].m, n = c.ambient().blocks()[0].n, k = c.dim();
    std::size_t best = n + m;
    std::vector<unsigned> coeff(k, 0);
    while (true) {
        std::size_t t = 0;
        while (t < k && ++coeff[t] == 4) coeff[t++] = 0;
        if (t == k) break;
        std::vector<std::vector<unsigned>> a(m, std::vector<unsigned>(n, 0));
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) a[i][j] ^= mul[coeff[r]][c.generator()(r, i * n + j)];
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < m; ++col) {
            std::size_t piv = rank;
            while (piv < m && a[piv][col] == 0) ++piv;
            if (piv == m) continue;
            std::swap(a[piv], a[rank]);
            const unsigned iv = inv[a[rank][col]];
            for (std::size_t i = 0; i < m; ++i)
                if (i != rank && a[i][col]) {
                    const unsigned f = mul[a[i][col]][iv];
                    for (std::size_t j = 0; j < n; ++j) a[i][j] ^= mul[f][a[rank][j]];
                }
            ++rank;
        }
        best = std::min(best, rank);
    }
    return best;
}

void criterion1(Criterion& c) {
    c.published("alpha(F_2^3)", {3, 2, 1}, alphas(full(2, 3)), [] { return oracle_profile(full(2, 3)); });
    c.published("alpha(F_2^4)", {4, 2, 2, 1}, alphas(full(2, 4)), [] { return oracle_profile(full(2, 4)); });
    const LinearCode t = builtin("ternary-422");
    c.published("alpha(ternary-422)", {4, 2, 2, 1}, alphas(t), [&] { return oracle_profile(t); });

    auto t0 = std::chrono::steady_clock::now();
    const V rs = alphas(reed_solomon(field_of_order(9), 4), 1, 4);
    const V tw = alphas(twisted_rs_f9(), 1, 4);
    const double secs = seconds_since(t0);
    c.expect(rs == V{9, 8, 7, 6}, "alpha(RS(F_9,4)) = " + str(rs));
    c.expect(tw == V{9, 8, 6, 6}, "alpha(twisted) = " + str(tw));
    c.expect(secs <= kRsSeconds, "RS pair took " + std::to_string(secs) + " s");

    const LinearCode c1 = builtin("duality-C1"), c2 = builtin("duality-C2");
    c.published("alpha(duality-C1)", {4, 2, 2, 2, 1}, alphas(c1), [&] { return oracle_profile(c1); });
    c.published("alpha(duality-C2)", {4, 2, 2, 2, 1}, alphas(c2), [&] { return oracle_profile(c2); });
    const LinearCode d1 = dual(c1), d2 = dual(c2);
    c.published("alpha(duality-C1 dual)", {5, 3, 2, 1, 1}, alphas(d1), [&] { return oracle_profile(d1); });
    c.published("alpha(duality-C2 dual)", {5, 2, 1, 1, 1}, alphas(d2), [&] { return oracle_profile(d2); });

    const LinearCode e7 = even_weight(7), e8 = even_weight(8);
    c.published("alpha(even_weight(7))", {6, 4, 2, 2, 2, 2, 1}, alphas(e7), [&] { return oracle_profile(e7); });
    c.published("alpha(even_weight(8))", {6, 4, 4, 2, 2, 2, 2, 1}, alphas(e8), [&] { return oracle_profile(e8); });

    for (std::size_t k = 1; k <= 4; ++k) {
        const V a = alphas(simplex(2, k), 1, k);
        c.expect(a == V(k, std::size_t{1} << (k - 1)), "simplex(2," + std::to_string(k) + ") = " + str(a));
    }
}

void criterion2(Criterion& c) {
    Budget b;
    const LinearCode br = builtin("BR17-C1");
    c.expect(min_distance(br, b) == 4, "d_min(BR17-C1)");
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t a5 = supercode_via_radii(br, 5, b);
    const double secs = seconds_since(t0);
    c.expect(a5 == 2, "alpha_5(BR17-C1) via radii = " + std::to_string(a5));
    c.expect(secs <= kBr17Seconds, "BR17 radii route took " + std::to_string(secs) + " s");
    c.expect(Analyzer(br, b).supercode(5, SupercodeRoute::direct).value == 2, "alpha_5(BR17-C1) direct");

    c.expect(alphas(builtin("gabidulin-4x4"), 5, 8) == V{3, 3, 3, 3}, "alpha_5..8(Gabidulin 4x4)");

    const LinearCode f1 = builtin("F4-C1"), f2 = builtin("F4-C2");
    c.published("alpha_1..4(F4-C1)", {2, 2, 2, 2}, alphas(f1, 1, 4), [&] { return oracle_profile(f1, 4); });
    c.published("alpha_1..4(F4-C2)", {2, 2, 2, 2}, alphas(f2, 1, 4), [&] { return oracle_profile(f2, 4); });
    const LinearCode g1 = dual(f1), g2 = dual(f2);
    c.published("alpha_1..4(F4-C1 dual)", {1, 1, 1, 1}, alphas(g1, 1, 4), [&] { return oracle_profile(g1, 4); });
    c.published("alpha_1..4(F4-C2 dual)", {2, 2, 2, 2}, alphas(g2, 1, 4), [&] { return oracle_profile(g2, 4); });
}

void criterion3(Criterion& c) {
    std::mt19937_64 rng(2024);
    std::size_t hamming = 0, rank_codes = 0, exceptions = 0;
    auto check = [&](const LinearCode& code) {
        Budget b;
        Analyzer an(code, b);
        for (std::size_t i = code.dim() + 1; i <= code.length(); ++i) {
            const std::size_t direct = an.supercode(i, SupercodeRoute::direct).value;
            const std::size_t radii = std::min(an.min_distance(), an.radius(i - code.dim()).value);
            if (direct != radii) ++exceptions;
        }
    };
    for (std::size_t t = 0; t < 240; ++t) {
        const unsigned q = t % 2 ? 3 : 2;
        const std::size_t n = 2 + t % 5;
        std::uniform_int_distribution<std::size_t> kd(1, std::min<std::size_t>(4, n - 1));
        check(random_code(Ambient::hamming(Field::get(q, 1), n), kd(rng), rng));
        ++hamming;
    }
    for (std::size_t t = 0; t < 24; ++t) {
        const std::size_t m = t % 2 ? 3 : 2;
        std::uniform_int_distribution<std::size_t> kd(1, m * m - 1);
        check(random_code(Ambient::rank(Field::get(2, 1), m, m), kd(rng), rng));
        ++rank_codes;
    }
    c.expect(hamming >= 200, "Hamming codes tested: " + std::to_string(hamming));
    c.expect(rank_codes >= 20, "rank codes tested: " + std::to_string(rank_codes));
    c.expect(exceptions == 0, std::to_string(exceptions) + " route disagreements");
}

std::vector<Ambient> property_ambients() {
    const auto f2 = Field::get(2, 1), f3 = Field::get(3, 1), f4 = Field::get(2, 2);
    return {Ambient::hamming(f2, 4), Ambient::hamming(f2, 5), Ambient::hamming(f2, 6), Ambient::hamming(f3, 4),
            Ambient::hamming(f3, 5), Ambient::hamming(f4, 4), Ambient::hamming(Field::get(5, 1), 3),
            Ambient::rank(f2, 2, 2), Ambient::rank(f2, 2, 3), Ambient::rank(f3, 2, 2),
            Ambient::sum_rank(f2, {{2, 2}, {1, 1}}), Ambient::sum_rank(f2, {{1, 2}, {2, 1}, {1, 1}})};
}

void criterion4(Criterion& c) {
    std::mt19937_64 rng(4242);
    const auto amb = property_ambients();
    std::size_t codes = 0, bad = 0;
    std::vector<std::string> notes;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok && notes.size() < 5) notes.push_back(what);
        bad += ok ? 0 : 1;
    };
    for (std::size_t t = 0; t < 600; ++t) {
        const Ambient& a = amb[t % amb.size()];
        std::uniform_int_distribution<std::size_t> kd(1, a.dim() - 1);
        const LinearCode code = random_code(a, kd(rng), rng);
        const std::size_t k = code.dim(), n = code.length();
        Budget b;
        Analyzer an(code, b);
        const V al = values(distance_profile(an, 1, n));
        const std::string tag = a.describe() + " k=" + std::to_string(k);
        for (std::size_t i = 1; i < n; ++i) note(al[i - 1] >= al[i], tag + ": monotonicity");
        note(al.front() == an.max_weight() && al[k - 1] == an.min_distance() && al.back() == 1, tag + ": endpoints");
        const V g = greedy_profile(an).values;
        for (std::size_t i = 0; i < n; ++i) note(g[i] <= al[i], tag + ": greedy domination");
        note(g.front() == al.front() && g[k - 1] == al[k - 1] && g[k] == al[k] && g.back() == al.back(),
             tag + ": greedy equality at 1, k, k+1, N");
        const auto ceiling = singleton_profile(code, b).ceiling;
        for (std::size_t i = 0; i < n; ++i) note(al[i] <= ceiling[i], tag + ": Singleton ceiling");
        if (a.metric() == Metric::hamming) {
            const auto sld = sld_set(code, b);
            for (std::size_t i = 0; i < k; ++i) note(sld.count(al[i]) == 1, tag + ": SLD membership");
            note(*sld.rbegin() == al.front() && *sld.begin() == al[k - 1], tag + ": SLD extremality");
            const auto h = parity_check(code);
            note(min_distance_via_parity(h, b) == an.min_distance(), tag + ": parity route");
            note(dual(dual(code)) == code, tag + ": dual involution");
            const auto cols = columns(h);
            if (h.rows() > 0 && rank(h) > 0 && cols.size() > h.rows())
                note(min_ld_card(cols, code.field(), b) == min_sld_card(cols, code.field(), b), tag + ": ld = sld");
            for (std::size_t pos = 0; pos < n && n > 1; ++pos) {
                const LinearCode pc = puncture(code, pos);
                if (pc.dim() == 0) continue;
                Budget pb;
                const V ap = values(distance_profile(pc, 1, n - 1, pb));
                for (std::size_t i = 0; i + 1 < n; ++i) note(ap[i] + 1 >= al[i], tag + ": puncturing");
            }
        }
        ++codes;
    }
    c.expect(codes >= 500, "codes tested: " + std::to_string(codes));
    c.expect(bad == 0, std::to_string(bad) + " property violations");
    for (const auto& s : notes) c.expect(false, s);
}

void criterion5(Criterion& c) {
    std::mt19937_64 rng(5151);
    std::size_t codes = 0, bad = 0;
    for (std::size_t t = 0; t < 120; ++t) {
        const std::size_t n = 2 + t % 6;
        std::uniform_int_distribution<std::size_t> kd(1, n - 1);
        const LinearCode code = random_code(Ambient::hamming(Field::get(2, 1), n), kd(rng), rng);
        Budget b;
        const V g = greedy_profile(code, b).values;
        const V prefix(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(code.dim()));
        const Matrix gen = greedy_generator(code, b);
        V weights;
        for (std::size_t r = 0; r < gen.rows(); ++r) weights.push_back(code.weight(gen.row(r)));
        const auto pd = partial_distances(gen, code.ambient(), b);
        if (weights != prefix || pd.deltas != prefix || !(LinearCode(code.ambient(), gen) == code)) ++bad;
        ++codes;
    }
    Budget b;
    const auto e = exponent(Matrix::from_rows(Field::get(2, 1), {{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}), b);
    c.expect(std::abs(e.value - 2.0 * std::log(2.0) / std::log(3.0) / 3.0) <= kExponentTolerance, "exponent of the 3x3 kernel");
    c.expect(codes >= 100, "codes tested: " + std::to_string(codes));
    c.expect(bad == 0, std::to_string(bad) + " codes where row weights or partial distances differ from the greedy profile");
}

void criterion6(Criterion& c) {
    Budget b;
    c.expect(extended_distance(even_weight(3), 2, 1, b) == 3, "alpha_1^2(even_weight(3)) = 3");
    const std::size_t x1 = extended_distance(builtin("duality-C1"), 2, 1, b);
    const std::size_t x2 = extended_distance(builtin("duality-C2"), 2, 1, b);
    c.expect(x1 == 5 && x2 == 4, "alpha_1^2 of the duality pair: " + std::to_string(x1) + " vs " + std::to_string(x2));

    const std::vector<LinearCode> hamming_goldens = {
        full(2, 3), full(2, 4), full(3, 3), builtin("ternary-422"), builtin("duality-C1"), builtin("duality-C2"),
        even_weight(3), even_weight(4), even_weight(5), even_weight(6), simplex(2, 1), simplex(2, 2), simplex(2, 3),
        builtin("nested-a-C"), builtin("nested-a-D"), builtin("nested-b-C"), builtin("nested-b-D")};
    for (const auto& g : hamming_goldens)
        for (unsigned l = 2; l <= 3; ++l)
            c.expect(extended_distance(g, l, g.dim(), b) == min_distance(g, b),
                     "alpha_k^" + std::to_string(l) + " = alpha_k on " + g.ambient().describe());

    struct Named {
        std::string name;
        LinearCode code;
    };
    const std::vector<Named> rank_goldens = {{"BR17-C1", builtin("BR17-C1")},
                                             {"gabidulin-4x4", builtin("gabidulin-4x4")},
                                             {"F4-C1", builtin("F4-C1")},
                                             {"F4-C2", builtin("F4-C2")},
                                             {"hadamard(2,2,2)", hadamard_rank(2, 2, 2)}};
    for (const auto& g : rank_goldens) {
        const std::size_t d = min_distance(g.code, b);
        c.expect(extended_distance(g.code, 3, g.code.dim(), b) == d, "alpha_k^3 = alpha_k on " + g.name);
        const std::size_t d2 = extended_distance(g.code, 2, g.code.dim(), b);
        c.published("alpha_k^2 on " + g.name, {d}, {d2}, [&] { return V{f4_min_rank(g.code)}; });
    }

    std::mt19937_64 rng(6161);
    std::size_t codes = 0, bad = 0;
    for (std::size_t t = 0; t < 60; ++t) {
        const std::size_t n = 2 + t % 4;
        std::uniform_int_distribution<std::size_t> kd(1, n - 1);
        const LinearCode code = random_code(Ambient::hamming(Field::get(2, 1), n), kd(rng), rng);
        const std::size_t lhs = extended_distance(code, 2, code.dim() + 1, b);
        const std::size_t rhs = std::min(min_distance(code, b), generalized_covering_radius(code, 2, b));
        bad += lhs == rhs ? 0 : 1;
        ++codes;
    }
    c.expect(codes >= 50, "generalized radii codes tested: " + std::to_string(codes));
    c.expect(bad == 0, std::to_string(bad) + " generalized radii disagreements");
}

void criterion7(Criterion& c) {
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const FieldPtr f = field_of_order(q);
        for (std::size_t k = 0; k <= 5; ++k)
            for (std::size_t i = 0; i <= k; ++i) {
                SubspaceEnumerator e(f, k, i);
                std::uint64_t n = 0;
                while (e.next()) ++n;
                c.expect(n == *gaussian_binomial(static_cast<unsigned>(k), static_cast<unsigned>(i), q),
                         "count for q=" + std::to_string(q) + " k=" + std::to_string(k) + " i=" + std::to_string(i));
            }
    }
    RunRequest req;
    req.greedy = req.radii = req.mu = req.bounds = true;
    for (const char* name : {"duality-C1", "ternary-422", "F4-C2", "nested-b-D"}) {
        const LinearCode code = builtin(name);
        req.alpha = std::pair<std::size_t, std::size_t>{1, code.length()};
        Limits one, many;
        many.workers = 4;
        c.expect(to_json(run_invariants(code, "h", req, one)) == to_json(run_invariants(code, "h", req, many)),
                 std::string("parallel report differs for ") + name);
    }
    std::mt19937_64 rng(7171);
    for (std::size_t t = 0; t < 20; ++t) {
        const LinearCode code = random_code(Ambient::hamming(Field::get(2 + t % 2, 1), 6), 1 + t % 5, rng);
        req.alpha = std::pair<std::size_t, std::size_t>{1, 6};
        Limits one, many;
        many.workers = 3;
        c.expect(to_json(run_invariants(code, "h", req, one)) == to_json(run_invariants(code, "h", req, many)),
                 "parallel report differs on a random code");
    }
}

void criterion8(Criterion& c) {
    Budget b;
    std::vector<LinearCode> codes = {builtin("duality-C1"), builtin("duality-C2"), even_weight(3), even_weight(4),
                                     builtin("ternary-422"), full(2, 3)};
    std::mt19937_64 rng(8181);
    for (std::size_t t = 0; t < 20; ++t) {
        const std::size_t n = 3 + t % 3;
        codes.push_back(random_code(Ambient::hamming(Field::get(2, 1), n), 1 + t % (n - 1), rng));
    }
    std::size_t violations = 0, pairs = 0;
    for (const auto& code : codes)
        for (std::size_t i = 1; i <= code.length(); ++i) {
            const auto as = asymptotic_distance(code, i, code.field()->q() == 2 ? 3 : 2, b);
            const std::size_t base = Analyzer(code, b).alpha(i).value;
            for (auto v : as.per_degree) {
                ++pairs;
                if (!(base <= v && v <= as.value)) ++violations;
            }
            c.expect(!as.certified, "asymptotic result claims certification");
            c.expect(as.marker().find("uncertified") != std::string::npos, "marker lacks 'uncertified'");
        }
    c.expect(violations == 0, std::to_string(violations) + " sandwich violations over " + std::to_string(pairs) + " pairs");

    RunRequest req;
    req.asymptotic = 3;
    const std::string json = to_json(run_invariants(builtin("duality-C2"), "h", req, Limits{}));
    c.expect(json.find("uncertified, swept l <= 3") != std::string::npos, "report output lacks the uncertified marker");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> all = {
        {"golden Hamming profiles", criterion1},
        {"rank-metric goldens", criterion2},
        {"supercode distance equals min(d_min, rho) on random codes", criterion3},
        {"property suites on random codes", criterion4},
        {"greedy generators realize greedy distances", criterion5},
        {"extension goldens and generalized radii", criterion6},
        {"enumerator exactness and parallel determinism", criterion7},
        {"extension sandwich and uncertified asymptotic output", criterion8},
    };
    std::size_t passed = 0, refuted = 0, failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Criterion c(static_cast<int>(i + 1), all[i].first);
        const auto t0 = std::chrono::steady_clock::now();
        c.run(all[i].second);
        c.print();
        std::printf("    %.2f s\n", seconds_since(t0));
        if (c.passed())
            ++passed;
        else if (c.confirmed_only())
            ++refuted;
        else
            ++failed;
    }
    std::printf("# %zu passed, %zu failed on refuted published values only, %zu failed otherwise\n", passed, refuted,
                failed);
    return failed == 0 ? 0 : 1;
}
