#include "codedist/goldens.hpp"

#include <chrono>

#include "codedist/constructions.hpp"
#include "codedist/errors.hpp"
#include "codedist/invariants.hpp"

namespace codedist {

const char* golden_status_name(GoldenStatus s) noexcept {
    switch (s) {
        case GoldenStatus::pass: return "PASS";
        case GoldenStatus::fail: return "FAIL";
        case GoldenStatus::disputed: return "DISPUTED";
    }
    return "?";
}

namespace {

using Values = std::vector<std::size_t>;

FieldPtr f2() { return Field::get(2, 1); }

LinearCode binary(const std::vector<std::vector<Elem>>& rows) {
    return LinearCode(Ambient::hamming(f2(), rows.front().size()), Matrix::from_rows(f2(), rows));
}

Values alphas(const LinearCode& c, Budget& b, std::size_t first = 1, std::size_t last = 0) {
    if (last == 0) last = c.length();
    Analyzer an(c, b);
    Values v;
    for (std::size_t i = first; i <= last; ++i) v.push_back(an.alpha(i).value);
    return v;
}

Values flag(bool x) { return {x ? 1u : 0u}; }

Golden make(std::string name, Values expected, std::function<Values(Budget&)> fn, std::optional<Values> corrected = {}) {
    return Golden{std::move(name), std::move(expected), std::move(corrected), std::move(fn)};
}

std::vector<Golden> build() {
    std::vector<Golden> g;
    const auto cube = [] { return LinearCode::full_space(Ambient::hamming(f2(), 3)); };

    g.push_back(make("alpha F_2^3", {3, 2, 1}, [=](Budget& b) { return alphas(cube(), b); }));
    g.push_back(make("alpha F_2^4", {4, 2, 2, 1},
                     [](Budget& b) { return alphas(LinearCode::full_space(Ambient::hamming(f2(), 4)), b); }));
    g.push_back(make("alpha_2 F_2^n = floor(2n/3), n = 3..6", {2, 2, 3, 4}, [](Budget& b) {
        Values v;
        for (std::size_t n = 3; n <= 6; ++n) v.push_back(alphas(LinearCode::full_space(Ambient::hamming(f2(), n)), b, 2, 2)[0]);
        return v;
    }));
    g.push_back(make("alpha ternary-422", {4, 2, 2, 1}, [](Budget& b) { return alphas(builtin("ternary-422"), b); }));
    g.push_back(make("ternary-422 is MDS", {1}, [](Budget& b) { return flag(singleton_profile(builtin("ternary-422"), b).is_mds); }));
    g.push_back(make("dual ternary-422", {1}, [](Budget&) {
        const FieldPtr f = Field::get(3, 1);
        return flag(dual(builtin("ternary-422")) == LinearCode(Ambient::hamming(f, 4), Matrix::from_rows(f, {{1, 1, 1, 2}})));
    }));
    g.push_back(make("alpha even-weight n = 4", {4, 2, 2, 1}, [](Budget& b) { return alphas(even_weight(4), b); }));
    g.push_back(make("alpha even-weight n = 7", {6, 4, 2, 2, 2, 2, 1}, [](Budget& b) { return alphas(even_weight(7), b); },
                     Values{6, 4, 4, 2, 2, 2, 1}));
    g.push_back(make("alpha even-weight n = 8", {6, 4, 4, 2, 2, 2, 2, 1}, [](Budget& b) { return alphas(even_weight(8), b); },
                     Values{8, 4, 4, 4, 2, 2, 2, 1}));
    g.push_back(make("even-weight maxwt = 2 floor(n/2), alpha_2 = 2 floor(n/3), n = 3..8",
                     {2, 2, 4, 2, 4, 2, 6, 4, 6, 4, 8, 4}, [](Budget& b) {
                         Values v;
                         for (std::size_t n = 3; n <= 8; ++n) {
                             const auto a = alphas(even_weight(n), b, 1, 2);
                             v.insert(v.end(), a.begin(), a.end());
                         }
                         return v;
                     }));
    g.push_back(make("even-weight F_2^4: parity check, SLD set, covering radius, mu", {1, 1, 1, 1, 1, 2, 4, 1, 1}, [](Budget& b) {
        const LinearCode c = even_weight(4);
        const Matrix h = parity_check(c);
        Values v = {h.rows(), h(0, 0), h(0, 1), h(0, 2), h(0, 3)};
        for (auto s : sld_set(c, b)) v.push_back(s);
        v.push_back(covering_radius(c, b));
        v.push_back(maximality_degree(c, b));
        return v;
    }));
    g.push_back(make("F_2^3: parity check zero row, SLD set", {1, 0, 0, 0, 1, 2, 3}, [=](Budget& b) {
        const Matrix h = parity_check(cube());
        Values v = {h.rows(), h(0, 0), h(0, 1), h(0, 2)};
        for (auto s : sld_set(cube(), b)) v.push_back(s);
        return v;
    }));
    g.push_back(make("alpha RS(F_9, 4), i = 1..4", {9, 8, 7, 6}, [](Budget& b) { return alphas(builtin("rs-f9-4"), b, 1, 4); }));
    g.push_back(make("alpha twisted RS over F_9, i = 1..4", {9, 8, 6, 6},
                     [](Budget& b) { return alphas(builtin("twisted-rs-f9"), b, 1, 4); }));
    g.push_back(make("RS(F_9, 4) attains the Singleton ceiling at every index", {9, 8, 7, 6, 5, 4, 3, 2, 1}, [](Budget& b) {
        const LinearCode c = builtin("rs-f9-4");
        Values v = alphas(c, b);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != singleton_ceiling(c.ambient(), i + 1)) return Values{};
        return v;
    }));
    g.push_back(make("RS vs twisted RS: first difference", {3}, [](Budget& b) {
        CompareOptions o;
        o.greedy = o.radii = o.mu = o.sld = false;
        o.last = 4;
        const auto c = compare_codes(builtin("rs-f9-4"), builtin("twisted-rs-f9"), o, b);
        for (std::size_t t = 0; t < c.a.alpha.alpha.size(); ++t)
            if (c.a.alpha.alpha[t].value != c.b.alpha.alpha[t].value) return Values{c.a.alpha.alpha[t].index};
        return Values{0};
    }));
    g.push_back(make("alpha duality-C1", {4, 2, 2, 2, 1}, [](Budget& b) { return alphas(builtin("duality-C1"), b); }));
    g.push_back(make("alpha duality-C2", {4, 2, 2, 2, 1}, [](Budget& b) { return alphas(builtin("duality-C2"), b); }));
    g.push_back(make("duals of the duality pair match the printed generators", {1, 1}, [](Budget&) {
        return Values{dual(builtin("duality-C1")) == binary({{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 1}}) ? 1u : 0u,
                      dual(builtin("duality-C2")) == binary({{0, 0, 0, 0, 1}, {1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}}) ? 1u : 0u};
    }));
    g.push_back(make("alpha dual of duality-C1", {5, 3, 2, 1, 1}, [](Budget& b) { return alphas(dual(builtin("duality-C1")), b); },
                     Values{5, 2, 2, 1, 1}));
    g.push_back(make("alpha dual of duality-C2", {5, 2, 1, 1, 1}, [](Budget& b) { return alphas(dual(builtin("duality-C2")), b); },
                     Values{5, 3, 1, 1, 1}));
    g.push_back(make("shortening: dim of C2 at last, dims of C1 at each position", {2, 1, 1, 1, 1, 1}, [](Budget&) {
        Values v = {shorten(builtin("duality-C2"), 4).dim()};
        for (std::size_t p = 0; p < 5; ++p) v.push_back(shorten(builtin("duality-C1"), p).dim());
        return v;
    }));
    g.push_back(make("puncturing: (dmin, maxwt) of C2 at last, C1 at 0..4", {2, 4, 2, 3, 2, 3, 2, 3, 1, 4, 1, 4}, [](Budget& b) {
        Values v;
        const LinearCode c2 = puncture(builtin("duality-C2"), 4);
        v.push_back(min_distance(c2, b));
        v.push_back(max_weight(c2, b));
        for (std::size_t p = 0; p < 5; ++p) {
            const LinearCode c1 = puncture(builtin("duality-C1"), p);
            v.push_back(min_distance(c1, b));
            v.push_back(max_weight(c1, b));
        }
        return v;
    }));
    g.push_back(make("simplex(2, k): alpha_1..alpha_k = 2^(k-1), k = 1..4", {1, 2, 2, 4, 4, 4, 8, 8, 8, 8}, [](Budget& b) {
        Values v;
        for (std::size_t k = 1; k <= 4; ++k) {
            const LinearCode c = simplex(2, k);
            const auto a = alphas(c, b, 1, k);
            v.insert(v.end(), a.begin(), a.end());
        }
        return v;
    }));
    g.push_back(make("nested pair with alpha_2(C) > alpha_2(D)", {3, 2}, [](Budget& b) {
        return Values{alphas(builtin("nested-a-C"), b, 2, 2)[0], alphas(builtin("nested-a-D"), b, 2, 2)[0]};
    }));
    g.push_back(make("nested pair with alpha_2(C) < alpha_2(D)", {2, 3}, [](Budget& b) {
        return Values{alphas(builtin("nested-b-C"), b, 2, 2)[0], alphas(builtin("nested-b-D"), b, 2, 2)[0]};
    }));
    g.push_back(make("BR17-C1: dmin, alpha_5", {4, 2}, [](Budget& b) { return alphas(builtin("BR17-C1"), b, 4, 5); }));
    g.push_back(make("BR17-C1 is MRD", {1}, [](Budget& b) { return flag(singleton_profile(builtin("BR17-C1"), b).is_mrd); }));
    g.push_back(make("Gabidulin 4x4 over F_2: dmin, alpha_5..alpha_8", {4, 3, 3, 3, 3},
                     [](Budget& b) { return alphas(builtin("gabidulin-4x4"), b, 4, 8); }));
    g.push_back(make("BR17-C1 vs Gabidulin differ at alpha_5", {2, 3}, [](Budget& b) {
        return Values{alphas(builtin("BR17-C1"), b, 5, 5)[0], alphas(builtin("gabidulin-4x4"), b, 5, 5)[0]};
    }));
    g.push_back(make("F_4 pair: alpha_1..alpha_4 of C1", {2, 2, 2, 2}, [](Budget& b) { return alphas(builtin("F4-C1"), b, 1, 4); },
                     Values{2, 2, 1, 1}));
    g.push_back(make("F_4 pair: alpha_1..alpha_4 of C2", {2, 2, 2, 2}, [](Budget& b) { return alphas(builtin("F4-C2"), b, 1, 4); }));
    g.push_back(make("F_4 pair: duals match the printed generators", {1, 1}, [](Budget&) {
        const FieldPtr f4 = Field::get(2, 2);
        auto ext = [&](const std::vector<std::vector<Elem>>& rows) {
            return LinearCode::from_extension(f2(), f4, Matrix::from_rows(f4, rows));
        };
        return Values{dual(builtin("F4-C1")) == ext({{1, 3, 1, 0}, {0, 0, 0, 1}}) ? 1u : 0u,
                      dual(builtin("F4-C2")) == ext({{1, 3, 0, 0}, {0, 0, 1, 3}}) ? 1u : 0u};
    }));
    g.push_back(make("F_4 pair: alpha_1..alpha_4 of the dual of C1", {1, 1, 1, 1},
                     [](Budget& b) { return alphas(dual(builtin("F4-C1")), b, 1, 4); }, Values{2, 2, 1, 1}));
    g.push_back(make("F_4 pair: alpha_1..alpha_4 of the dual of C2", {2, 2, 2, 2},
                     [](Budget& b) { return alphas(dual(builtin("F4-C2")), b, 1, 4); }));
    g.push_back(make("rank Hadamard (q, m, k) = (2, 2, 2): alpha_1, alpha_2", {2, 2},
                     [](Budget& b) { return alphas(hadamard_rank(2, 2, 2), b, 1, 2); }));
    g.push_back(make("greedy F_2^3", {3, 1, 1}, [=](Budget& b) { return greedy_profile(cube(), b).values; }));
    g.push_back(make("greedy <100, 010> in F_2^3", {2, 1, 1},
                     [](Budget& b) { return greedy_profile(binary({{1, 0, 0}, {0, 1, 0}}), b).values; }));
    g.push_back(make("<100, 010> is not maximal", {0},
                     [](Budget& b) { return flag(is_maximal(binary({{1, 0, 0}, {0, 1, 0}}), b)); }));
    g.push_back(make("greedy F_3^3 = 3, 2, 1", {3, 2, 1},
                     [](Budget& b) { return greedy_profile(LinearCode::full_space(Ambient::hamming(Field::get(3, 1), 3)), b).values; }));
    g.push_back(make("partial distances of [[1,1,0],[0,1,1],[1,1,1]]", {2, 2, 1}, [](Budget& b) {
        return partial_distances(Matrix::from_rows(f2(), {{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}), b).deltas;
    }));
    g.push_back(make("alpha_1 of even-weight(3) over F_2 and F_4", {2, 3}, [](Budget& b) {
        return Values{alphas(even_weight(3), b, 1, 1)[0], extended_distance(even_weight(3), 2, 1, b)};
    }));
    g.push_back(make("alpha_1 over F_4 of duality-C1, duality-C2", {5, 4}, [](Budget& b) {
        return Values{extended_distance(builtin("duality-C1"), 2, 1, b), extended_distance(builtin("duality-C2"), 2, 1, b)};
    }));
    g.push_back(make("alpha_j over F_4 of the duality pair, j = 2..4", {2, 2, 2, 2, 2, 2}, [](Budget& b) {
        Values v;
        for (const char* name : {"duality-C1", "duality-C2"})
            for (std::size_t j = 2; j <= 4; ++j) v.push_back(extended_distance(builtin(name), 2, j, b));
        return v;
    }));
    g.push_back(make("asymptotic alpha_1 of duality-C2, l <= 3", {4},
                     [](Budget& b) { return Values{asymptotic_distance(builtin("duality-C2"), 1, 3, b).value}; }));
    return g;
}

}  // namespace

const std::vector<Golden>& golden_registry() {
    static const std::vector<Golden> g = build();
    return g;
}

std::string index_diff(const std::vector<std::size_t>& expected, const std::vector<std::size_t>& computed) {
    std::string s;
    const std::size_t n = std::max(expected.size(), computed.size());
    for (std::size_t t = 0; t < n; ++t) {
        const std::string e = t < expected.size() ? std::to_string(expected[t]) : "-";
        const std::string c = t < computed.size() ? std::to_string(computed[t]) : "-";
        if (e != c) s += (s.empty() ? "" : "; ") + std::string("[") + std::to_string(t + 1) + "] expected " + e + ", got " + c;
    }
    return s;
}

std::vector<GoldenOutcome> run_goldens(const Limits& limits, const std::string& filter,
                                       const std::map<std::string, std::vector<std::size_t>>& overrides) {
    std::vector<GoldenOutcome> out;
    for (const auto& g : golden_registry()) {
        if (!filter.empty() && g.name.find(filter) == std::string::npos) continue;
        GoldenOutcome o;
        o.name = g.name;
        o.expected = g.expected;
        std::optional<std::vector<std::size_t>> corrected = g.corrected;
        if (const auto it = overrides.find(g.name); it != overrides.end()) {
            o.expected = it->second;
            corrected.reset();
        }
        Budget budget(limits);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o.computed = g.compute(budget);
            if (o.computed == o.expected) {
                o.status = GoldenStatus::pass;
            } else if (corrected && o.computed == *corrected) {
                o.status = GoldenStatus::disputed;
                o.detail = "published value contradicts exhaustive search: " + index_diff(o.expected, o.computed);
            } else {
                o.status = GoldenStatus::fail;
                o.detail = index_diff(o.expected, o.computed);
            }
        } catch (const std::exception& ex) {
            o.status = GoldenStatus::fail;
            o.detail = ex.what();
        }
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace codedist
