#include "codedist/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "codedist/errors.hpp"

namespace codedist {

const char* route_name(SupercodeRoute r) noexcept {
    switch (r) {
        case SupercodeRoute::automatic: return "automatic";
        case SupercodeRoute::direct: return "direct";
        case SupercodeRoute::radii: return "radii";
    }
    return "?";
}

Analyzer::Analyzer(const LinearCode& code, Budget& budget) : code_(code), budget_(budget) {}

std::size_t Analyzer::min_distance() {
    if (!dmin_) {
        if (codewords_) {
            std::size_t best = code_.ambient().max_weight() + 1;
            for (std::uint64_t x = 1; x < codewords_->weight.size(); ++x)
                best = std::min<std::size_t>(best, codewords_->weight[x]);
            dmin_ = best;
        } else {
            dmin_ = codedist::min_distance(code_, budget_);
        }
    }
    return *dmin_;
}

std::size_t Analyzer::max_weight() {
    if (!maxwt_) maxwt_ = codewords_ ? codewords_->max() : codedist::max_weight(code_, budget_);
    return *maxwt_;
}

const WeightTable& Analyzer::codewords() {
    if (!codewords_) codewords_ = codeword_table(code_, budget_);
    return *codewords_;
}

const WeightTable& Analyzer::coset_leaders() {
    if (!cosets_) cosets_ = coset_leader_table(code_, budget_);
    return *cosets_;
}

const WeightTable& Analyzer::ambient_weights() {
    if (!ambient_) ambient_ = ambient_table(code_.ambient(), budget_);
    return *ambient_;
}

Matrix Analyzer::lift_syndromes(const Matrix& rows) const {
    Matrix out = code_.generator();
    for (std::size_t r = 0; r < rows.rows(); ++r) out.append_row(code_.lift(rows.row(r)));
    return row_basis(out);
}

DistanceResult Analyzer::subcode(std::size_t i, SearchStrategy strategy) {
    if (i < 1 || i > code_.dim()) fail(Errc::invalid_argument, "subcode index out of range");
    if (i == code_.dim()) return {min_distance(), code_.generator(), "dmin"};
    const WeightTable& t = codewords();
    const auto opt = max_min_subspace(t, i, t.max(), budget_, strategy);
    return {opt.value, row_basis(opt.basis * code_.generator()), strategy_name(opt.used)};
}

std::uint64_t Analyzer::radii_cost(std::size_t i) {
    const std::uint64_t q = code_.field()->q();
    const std::size_t r = code_.length() - code_.dim();
    std::uint64_t cost = enumeration_cost(r, i - code_.dim(), q);
    if (!cosets_) {
        std::uint64_t gens = 0;
        for (const auto& b : code_.ambient().blocks())
            gens = sat_add(gens, code_.ambient().metric() == Metric::hamming
                                     ? q - 1
                                     : sat_mul(sat_pow(q, b.m) - 1, (sat_pow(q, b.n) - 1) / (q - 1)));
        cost = sat_add(cost, sat_mul(sat_pow(q, r), gens));
    }
    return cost;
}

std::uint64_t Analyzer::direct_cost(std::size_t i) {
    const std::uint64_t q = code_.field()->q();
    if (sat_pow(q, code_.length()) > kAmbientTableLimit) return kSaturated;
    const std::size_t r = code_.length() - code_.dim();
    std::uint64_t cost = sat_mul(gaussian_binomial_sat(static_cast<unsigned>(r), static_cast<unsigned>(i - code_.dim()), q),
                                 projective_count(static_cast<unsigned>(i), q));
    if (!ambient_) cost = sat_add(cost, projective_count(static_cast<unsigned>(code_.length()), q));
    return cost;
}

DistanceResult Analyzer::supercode(std::size_t i, SupercodeRoute route) {
    const std::size_t k = code_.dim(), n = code_.length();
    if (i < k || i > n) fail(Errc::invalid_argument, "supercode index out of range");
    if (i == k) return {min_distance(), code_.generator(), "dmin"};
    if (i == n) return {1, Matrix::identity(code_.field(), n), "full"};

    auto run_radii = [&]() -> DistanceResult {
        const WeightTable& cl = coset_leaders();
        const auto opt = max_min_subspace(cl, i - k, min_distance(), budget_);
        return {opt.value, lift_syndromes(opt.basis), std::string("radii/") + strategy_name(opt.used)};
    };
    auto run_direct = [&]() -> DistanceResult {
        const auto opt = direct_supercode_search(code_, ambient_weights(), i, budget_);
        return {opt.value, opt.basis, "direct"};
    };

    if (route == SupercodeRoute::radii) return run_radii();
    if (route == SupercodeRoute::direct) {
        const std::uint64_t dc = direct_cost(i);
        if (!budget_.fits(dc)) throw BudgetExceeded(dc, budget_.limits().budget);
        return run_direct();
    }
    const std::uint64_t rc = radii_cost(i), dc = direct_cost(i);
    const std::uint64_t half = budget_.remaining() / 2;
    if (rc <= half && dc <= half) {
        auto a = run_radii();
        const auto b = run_direct();
        if (a.value != b.value)
            fail(Errc::internal, "supercode routes disagree at index " + std::to_string(i) + ": radii " +
                                     std::to_string(a.value) + ", direct " + std::to_string(b.value));
        a.route += "+direct";
        return a;
    }
    if (dc < rc && budget_.fits(dc)) return run_direct();
    return run_radii();
}

DistanceResult Analyzer::alpha(std::size_t i) {
    if (auto it = alpha_cache_.find(i); it != alpha_cache_.end()) return it->second;
    if (i < 1 || i > code_.length()) fail(Errc::invalid_argument, "alpha index out of range");
    DistanceResult r = i <= code_.dim() ? subcode(i) : supercode(i);
    alpha_cache_.emplace(i, r);
    return r;
}

DistanceResult Analyzer::radius(std::size_t j, SearchStrategy strategy) {
    const std::size_t r = code_.length() - code_.dim();
    if (j < 1 || j > r) fail(Errc::invalid_argument, "radius index out of range");
    const WeightTable& cl = coset_leaders();
    const auto opt = max_min_subspace(cl, j, cl.max(), budget_, strategy);
    return {opt.value, lift_syndromes(opt.basis), strategy_name(opt.used)};
}

std::size_t Analyzer::covering_radius() { return coset_leaders().max(); }

DistanceResult subcode_distance(const LinearCode& code, std::size_t i, Budget& budget) {
    Analyzer a(code, budget);
    return a.subcode(i);
}

DistanceResult supercode_distance(const LinearCode& code, std::size_t i, Budget& budget, SupercodeRoute route) {
    Analyzer a(code, budget);
    return a.supercode(i, route);
}

std::size_t covering_radius(const LinearCode& code, Budget& budget) {
    Analyzer a(code, budget);
    return a.covering_radius();
}

std::size_t generalized_radius(const LinearCode& code, std::size_t j, Budget& budget) {
    Analyzer a(code, budget);
    return a.radius(j).value;
}

std::size_t supercode_via_radii(const LinearCode& code, std::size_t i, Budget& budget) {
    if (i < code.dim() || i > code.length()) fail(Errc::invalid_argument, "supercode index out of range");
    Analyzer a(code, budget);
    if (i == code.dim()) return a.min_distance();
    return std::min(a.min_distance(), a.radius(i - code.dim()).value);
}

InvariantProfile distance_profile(Analyzer& analyzer, std::size_t first, std::size_t last) {
    const LinearCode& code = analyzer.code();
    InvariantProfile p;
    p.length = code.length();
    p.dim = code.dim();
    if (first < 1 || last > code.length() || first > last) fail(Errc::invalid_argument, "alpha range out of bounds");
    for (std::size_t i = first; i <= last; ++i) {
        IndexEntry e;
        e.index = i;
        try {
            auto r = analyzer.alpha(i);
            e.value = r.value;
            e.witness = std::move(r.witness);
            e.route = std::move(r.route);
        } catch (const BudgetExceeded& ex) {
            e.skipped = ex.what();
        }
        p.alpha.push_back(std::move(e));
    }
    return p;
}

InvariantProfile distance_profile(const LinearCode& code, std::size_t first, std::size_t last, Budget& budget) {
    Analyzer a(code, budget);
    return distance_profile(a, first, last);
}

std::vector<std::size_t> values(const InvariantProfile& p) {
    std::vector<std::size_t> out;
    for (const auto& e : p.alpha) {
        if (!e.value) fail(Errc::budget_exceeded, "alpha_" + std::to_string(e.index) + " skipped: " + e.skipped);
        out.push_back(*e.value);
    }
    return out;
}

namespace {

struct LevelNode {
    std::vector<std::uint64_t> key;    // canonical basis rows
    std::vector<std::uint64_t> elems;  // every element of the span, sorted
    std::size_t value = 0;
    std::size_t parent = 0;
    std::uint64_t added = 0;
};

// Breadth-first greedy levels over a weight table: level i holds every i-dimensional subspace that extends
// a member of level i-1 and attains the level maximum of min(start, weights).
std::vector<std::size_t> greedy_levels(const WeightTable& t, std::size_t start, std::size_t levels,
                                       std::size_t cap, Budget& budget, std::vector<std::uint64_t>& chain,
                                       std::vector<std::size_t>& sizes) {
    const CoordSpace& sp = t.space;
    const FieldPtr& f = sp.field();
    const auto points = sp.projective_points();
    std::vector<std::vector<LevelNode>> all;
    all.push_back({LevelNode{{}, {0}, start, 0, 0}});
    std::vector<std::size_t> values;
    Matrix rows(f, 0, sp.dim());
    std::vector<Elem> buf(sp.dim());

    for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
        const auto& prev = all.back();
        std::vector<LevelNode> next;
        std::set<std::vector<std::uint64_t>> seen;
        std::size_t best = 0;
        for (std::size_t pi = 0; pi < prev.size(); ++pi) {
            const LevelNode& node = prev[pi];
            budget.charge(sat_mul(points.size(), node.elems.size()));
            for (auto x : points) {
                if (std::binary_search(node.elems.begin(), node.elems.end(), x)) continue;
                std::size_t v = node.value;
                for (auto s : node.elems) {
                    if (s == 0) continue;
                    v = std::min<std::size_t>(v, t[sp.add(x, s)]);
                    if (v < best) break;
                }
                v = std::min<std::size_t>(v, t[x]);
                if (v < best) continue;
                if (v > best) {
                    best = v;
                    next.clear();
                    seen.clear();
                }
                rows = Matrix(f, 0, sp.dim());
                for (auto c : node.key) {
                    sp.decode(c, buf);
                    rows.append_row(buf);
                }
                sp.decode(x, buf);
                rows.append_row(buf);
                const Matrix canon = row_basis(rows);
                std::vector<std::uint64_t> key(canon.rows());
                for (std::size_t r = 0; r < canon.rows(); ++r) key[r] = sp.encode(canon.row(r));
                if (!seen.insert(key).second) continue;
                LevelNode child{std::move(key), node.elems, v, pi, x};
                for (Elem c = 1; c < f->q(); ++c) {
                    const std::uint64_t cx = sp.scale(c, x);
                    for (auto s : node.elems) child.elems.push_back(sp.add(cx, s));
                }
                std::sort(child.elems.begin(), child.elems.end());
                next.push_back(std::move(child));
                if (next.size() > cap)
                    fail(Errc::level_set_overflow, "greedy level " + std::to_string(lvl) + " exceeds the cap of " +
                                                       std::to_string(cap) + " codes");
            }
        }
        values.push_back(best);
        sizes.push_back(next.size());
        all.push_back(std::move(next));
    }
    chain.assign(levels, 0);
    std::size_t idx = 0;
    for (std::size_t lvl = levels; lvl >= 1; --lvl) {
        const LevelNode& n = all[lvl][idx];
        chain[lvl - 1] = n.added;
        idx = n.parent;
    }
    return values;
}

}  // namespace

GreedyProfile greedy_profile(Analyzer& analyzer) {
    const LinearCode& code = analyzer.code();
    Budget& budget = analyzer.budget();
    const std::size_t k = code.dim(), n = code.length();
    const std::size_t cap = budget.limits().level_cap;
    GreedyProfile gp;
    gp.chain.basis = Matrix(code.field(), 0, n);
    std::vector<Elem> buf;
    if (k > 0) {
        const WeightTable& t = analyzer.codewords();
        std::vector<std::uint64_t> chain;
        const auto v = greedy_levels(t, 255, k, cap, budget, chain, gp.level_sizes);
        gp.values.insert(gp.values.end(), v.begin(), v.end());
        buf.resize(k);
        for (auto c : chain) {
            t.space.decode(c, buf);
            gp.chain.basis.append_row(code.generator().combine(buf));
        }
    }
    if (n > k) {
        const WeightTable& t = analyzer.coset_leaders();
        const std::size_t start = k > 0 ? analyzer.min_distance() : 255;
        std::vector<std::uint64_t> chain;
        const auto v = greedy_levels(t, start, n - k, cap, budget, chain, gp.level_sizes);
        gp.values.insert(gp.values.end(), v.begin(), v.end());
        buf.resize(n - k);
        for (auto c : chain) {
            t.space.decode(c, buf);
            gp.chain.basis.append_row(code.lift(buf));
        }
    }
    Matrix prefix(code.field(), 0, n);
    for (std::size_t i = 0; i < n; ++i) {
        prefix.append_row(gp.chain.basis.row(i));
        gp.chain.codes.push_back(row_basis(prefix));
    }
    return gp;
}

GreedyProfile greedy_profile(const LinearCode& code, Budget& budget) {
    Analyzer a(code, budget);
    return greedy_profile(a);
}

std::size_t maximality_degree(Analyzer& analyzer) {
    const LinearCode& code = analyzer.code();
    if (code.is_full_space()) fail(Errc::not_applicable, "the maximality degree needs a proper subspace");
    if (code.dim() == 0) fail(Errc::not_applicable, "the maximality degree needs a nonzero code");
    return analyzer.min_distance() - analyzer.alpha(code.dim() + 1).value;
}

std::size_t maximality_degree(const LinearCode& code, Budget& budget) {
    Analyzer a(code, budget);
    return maximality_degree(a);
}

bool is_maximal(const LinearCode& code, Budget& budget) { return maximality_degree(code, budget) > 0; }

namespace {

// Calls fn(v) for every v = base + sum c_t rows[t] (rows of m, first `count` rows).
template <class Fn>
void for_each_in_coset(const Field& f, std::span<const Elem> base, const Matrix& m, std::size_t count, Fn&& fn) {
    std::vector<Elem> cur(base.begin(), base.end()), digits(count, 0);
    const Elem q = f.q();
    while (true) {
        fn(static_cast<std::span<const Elem>>(cur));
        std::size_t t = 0;
        for (; t < count; ++t) {
            const Elem old = digits[t];
            const Elem nxt = old + 1 < q ? old + 1 : 0;
            digits[t] = nxt;
            f.axpy(cur, f.sub(nxt, old), m.row(t));
            if (nxt != 0) break;
        }
        if (t == count) return;
    }
}

}  // namespace

PartialDistanceProfile partial_distances(const Matrix& a, const Ambient& ambient, Budget& budget) {
    if (a.cols() != ambient.dim()) fail(Errc::length_mismatch, "matrix width does not match the ambient");
    if (a.rows() == 0 || rank(a) != a.rows()) fail(Errc::rank_deficient, "partial distances need independent rows");
    const Field& f = *a.field();
    PartialDistanceProfile out;
    out.matrix = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        budget.reserve(sat_pow(f.q(), i));
        std::size_t best = ambient.max_weight() + 1;
        for_each_in_coset(f, a.row(i), a, i, [&](std::span<const Elem> v) { best = std::min(best, ambient.weight(v)); });
        out.deltas.push_back(best);
    }
    if (a.rows() == a.cols() && ambient.metric() == Metric::hamming) {
        out.exponent = exponent_of(out.deltas);
        out.exponent_ceiling = exponent_ceiling(a.rows());
    }
    return out;
}

PartialDistanceProfile partial_distances(const Matrix& a, Budget& budget) {
    return partial_distances(a, Ambient::hamming(a.field(), a.cols()), budget);
}

double exponent_of(const std::vector<std::size_t>& deltas) {
    const std::size_t n = deltas.size();
    if (n <= 1) return 0.0;
    double s = 0;
    for (auto d : deltas) s += std::log(static_cast<double>(d));
    return s / std::log(static_cast<double>(n)) / static_cast<double>(n);
}

double exponent_ceiling(std::size_t n) {
    std::vector<std::size_t> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = n - i;
    return exponent_of(d);
}

ExponentResult exponent(const Matrix& a, Budget& budget) {
    if (a.rows() != a.cols() || rank(a) != a.rows()) fail(Errc::not_invertible, "the exponent needs an invertible matrix");
    const auto p = partial_distances(a, budget);
    return {*p.exponent, *p.exponent_ceiling};
}

Matrix greedy_generator(const LinearCode& code, Budget& budget) {
    const std::size_t k = code.dim();
    if (k == 0) fail(Errc::not_applicable, "the zero code has no generator");
    Analyzer an(code, budget);
    const GreedyProfile gp = greedy_profile(an);
    const Field& f = *code.field();
    const Ambient& amb = code.ambient();
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        const auto x = gp.chain.basis.row(i);
        const std::size_t d = gp.values[i];
        std::size_t j = 0;  // insertion position: first index of the plateau at value d
        while (j < i && gp.values[j] != d) ++j;
        Matrix prefix(code.field(), 0, code.length());
        for (std::size_t t = 0; t < j; ++t) prefix.append_row(rows[t]);
        budget.reserve(sat_mul(sat_pow(f.q(), j), f.q() - 1));
        std::vector<Elem> best;
        std::size_t best_w = 0;
        std::vector<Elem> cx(x.size());
        for (Elem c = 1; c < f.q(); ++c) {
            std::fill(cx.begin(), cx.end(), 0);
            f.axpy(cx, c, x);
            for_each_in_coset(f, cx, prefix, j, [&](std::span<const Elem> v) {
                const std::size_t w = amb.weight(v);
                if (best.empty() || w < best_w || (w == best_w && std::lexicographical_compare(v.begin(), v.end(),
                                                                                               best.begin(), best.end()))) {
                    best.assign(v.begin(), v.end());
                    best_w = w;
                }
            });
        }
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(j), std::move(best));
    }
    Matrix g = Matrix::from_rows(code.field(), rows);
    const auto pd = partial_distances(g, amb, budget);
    for (std::size_t i = 0; i < k; ++i)
        if (amb.weight(g.row(i)) != gp.values[i] || pd.deltas[i] != gp.values[i])
            fail(Errc::internal, "greedy generator does not reproduce the greedy distances");
    return g;
}

GreedyLowerBound greedy_lower_bound(const LinearCode& code, const Matrix& basis, Budget& budget) {
    if (basis.rows() != code.dim() || basis.cols() != code.length() || rank(basis) != code.dim() ||
        !(LinearCode(code.ambient(), basis) == code))
        fail(Errc::not_a_basis, "rows do not form a basis of the code");
    GreedyLowerBound out;
    const std::size_t d = min_distance(code, budget);
    out.span_bound.assign(code.dim(), d);
    std::vector<std::size_t> order(basis.rows());
    std::vector<std::size_t> w(basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        order[r] = r;
        w[r] = code.weight(basis.row(r));
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
    Matrix prefix(code.field(), 0, code.length());
    for (auto r : order) {
        prefix.append_row(basis.row(r));
        out.prefix_bound.push_back(min_distance(LinearCode(code.ambient(), prefix), budget));
    }
    return out;
}

std::size_t extended_distance(const LinearCode& code, unsigned degree, std::size_t i, Budget& budget) {
    Analyzer a(extend_code(code, degree), budget);
    return a.alpha(i).value;
}

std::string AsymptoticResult::marker() const {
    return "uncertified, swept l <= " + std::to_string(swept);
}

AsymptoticResult asymptotic_distance(const LinearCode& code, std::size_t i, unsigned max_degree, Budget& budget) {
    if (max_degree < 1) fail(Errc::invalid_argument, "the sweep needs max_degree >= 1");
    AsymptoticResult r;
    for (unsigned l = 1; l <= max_degree; ++l) {
        const std::size_t v = extended_distance(code, l, i, budget);
        r.per_degree.push_back(v);
        if (v > r.value) {
            r.value = v;
            r.stabilized_at = l;
        }
    }
    r.swept = max_degree;
    const std::size_t tail = (max_degree + 1) / 2;
    r.constant_tail = std::all_of(r.per_degree.end() - static_cast<std::ptrdiff_t>(tail), r.per_degree.end(),
                                  [&](std::size_t v) { return v == r.per_degree.back(); });
    r.certified = false;
    return r;
}

std::size_t generalized_covering_radius(const LinearCode& code, unsigned degree, Budget& budget) {
    return covering_radius(extend_code(code, degree), budget);
}

std::size_t singleton_ceiling(const Ambient& ambient, std::size_t i) {
    std::vector<Block> blocks;
    for (auto b : ambient.blocks()) blocks.push_back(b.n <= b.m ? b : Block{b.n, b.m});
    std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return a.m != b.m ? a.m > b.m : a.n > b.n;
    });
    std::size_t total_n = 0;
    for (const auto& b : blocks) total_n += b.n;
    // d - 1 = n_1 + ... + n_{j-1} + delta with 0 <= delta < n_j; the bound is i <= sum_{h >= j} m_h n_h - m_j delta.
    for (std::size_t d = total_n; d >= 1; --d) {
        std::size_t rest = d - 1, j = 0;
        while (rest >= blocks[j].n) rest -= blocks[j++].n;
        std::size_t room = 0;
        for (std::size_t h = j; h < blocks.size(); ++h) room += blocks[h].m * blocks[h].n;
        room -= blocks[j].m * rest;
        if (i <= room) return d;
    }
    return 0;
}

SingletonProfile singleton_profile(const LinearCode& code, Budget& budget) {
    const Ambient& amb = code.ambient();
    SingletonProfile s;
    for (std::size_t i = 1; i <= code.length(); ++i) s.ceiling.push_back(singleton_ceiling(amb, i));
    if (code.dim() == 0) return s;
    const std::size_t d = min_distance(code, budget), k = code.dim();
    switch (amb.metric()) {
        case Metric::hamming:
            s.is_mds = d == code.length() - k + 1;
            break;
        case Metric::rank: {
            const std::size_t m = std::max(amb.blocks()[0].m, amb.blocks()[0].n);
            const std::size_t n = std::min(amb.blocks()[0].m, amb.blocks()[0].n);
            bool differs = false;
            for (std::size_t i = 1; i <= code.length(); ++i) {
                const std::size_t printed = n - i / m + 1;
                s.floor_form.push_back(std::min(printed, n));
                if (printed > n) differs = true;
                if (std::min(printed, n) != s.ceiling[i - 1]) differs = true;
            }
            if (differs)
                s.notes.push_back("rank bound n - floor(i/m) + 1 is capped at n and differs from n - ceil(i/m) + 1 "
                                  "where m does not divide i");
            if (k % m == 0)
                s.is_mrd = d == n - k / m + 1;
            else
                s.is_qmrd = d == n - (k + m - 1) / m + 1;
            break;
        }
        case Metric::sum_rank:
            s.is_msrd = d == s.ceiling[k - 1];
            break;
    }
    return s;
}

std::string Comparison::verdict() const {
    return inequivalent ? "provably inequivalent" : "indistinguishable by these invariants";
}

namespace {

CodeSummary summarize(const LinearCode& code, const CompareOptions& o, Budget& budget) {
    CodeSummary s;
    Analyzer an(code, budget);
    const std::size_t last = o.last == 0 ? code.length() : o.last;
    s.alpha = distance_profile(an, o.first, last);
    for (const auto& e : s.alpha.alpha)
        if (!e.value) s.skipped.push_back("alpha_" + std::to_string(e.index) + ": " + e.skipped);
    auto guarded = [&](const char* what, auto&& fn) {
        try {
            fn();
        } catch (const BudgetExceeded& ex) {
            s.skipped.push_back(std::string(what) + ": " + ex.what());
        } catch (const Error& ex) {
            if (ex.code() != Errc::level_set_overflow && ex.code() != Errc::not_applicable) throw;
            s.skipped.push_back(std::string(what) + ": " + ex.what());
        }
    };
    if (o.greedy) guarded("greedy", [&] { s.greedy = greedy_profile(an).values; });
    if (o.radii && code.length() > code.dim())
        guarded("rho", [&] {
            std::vector<std::size_t> r;
            for (std::size_t j = 1; j <= code.length() - code.dim(); ++j) r.push_back(an.radius(j).value);
            s.rho = r;
        });
    if (o.mu) guarded("mu", [&] { s.mu = maximality_degree(an); });
    if (o.sld && code.ambient().metric() == Metric::hamming && code.dim() > 0)
        guarded("sld", [&] { s.sld = sld_set(code, budget); });
    for (unsigned l = 2; l <= o.asymptotic; ++l) {
        guarded(("extension " + std::to_string(l)).c_str(), [&] {
            Analyzer ext(extend_code(code, l), budget);
            std::vector<std::optional<std::size_t>> vals;
            for (std::size_t i = o.first; i <= last; ++i) {
                try {
                    vals.push_back(ext.alpha(i).value);
                } catch (const BudgetExceeded& ex) {
                    vals.push_back(std::nullopt);
                    s.skipped.push_back("alpha^" + std::to_string(l) + "_" + std::to_string(i) + ": " + ex.what());
                }
            }
            s.extended[l] = std::move(vals);
        });
    }
    return s;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

Comparison compare_codes(const LinearCode& a, const LinearCode& b, const CompareOptions& opts, Budget& budget) {
    if (!(a.ambient() == b.ambient())) fail(Errc::ambient_mismatch, "codes live in different ambients");
    Comparison c;
    c.a = summarize(a, opts, budget);
    c.b = summarize(b, opts, budget);
    auto note = [&](const std::string& s) {
        c.differences.push_back(s);
        c.inequivalent = true;
    };
    for (std::size_t t = 0; t < c.a.alpha.alpha.size(); ++t) {
        const auto& x = c.a.alpha.alpha[t];
        const auto& y = c.b.alpha.alpha[t];
        if (x.value && y.value && *x.value != *y.value)
            note("alpha[" + std::to_string(x.index) + "]: " + std::to_string(*x.value) + " vs " + std::to_string(*y.value));
    }
    auto seq = [&](const char* name, const auto& x, const auto& y, std::size_t offset) {
        if (!x || !y) return;
        for (std::size_t t = 0; t < std::min(x->size(), y->size()); ++t)
            if ((*x)[t] != (*y)[t])
                note(std::string(name) + "[" + std::to_string(t + offset) + "]: " + std::to_string((*x)[t]) + " vs " +
                     std::to_string((*y)[t]));
    };
    seq("greedy", c.a.greedy, c.b.greedy, 1);
    seq("rho", c.a.rho, c.b.rho, 1);
    if (c.a.mu && c.b.mu && *c.a.mu != *c.b.mu) note("mu: " + std::to_string(*c.a.mu) + " vs " + std::to_string(*c.b.mu));
    if (c.a.sld && c.b.sld && *c.a.sld != *c.b.sld)
        note("sld: {" + join({c.a.sld->begin(), c.a.sld->end()}) + "} vs {" + join({c.b.sld->begin(), c.b.sld->end()}) + "}");
    for (const auto& [l, xs] : c.a.extended) {
        auto it = c.b.extended.find(l);
        if (it == c.b.extended.end()) continue;
        for (std::size_t t = 0; t < std::min(xs.size(), it->second.size()); ++t)
            if (xs[t] && it->second[t] && *xs[t] != *it->second[t])
                note("alpha^" + std::to_string(l) + "[" + std::to_string(opts.first + t) + "]: " + std::to_string(*xs[t]) +
                     " vs " + std::to_string(*it->second[t]));
    }
    return c;
}

}  // namespace codedist
