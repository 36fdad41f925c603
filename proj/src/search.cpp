#include "codedist/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "codedist/errors.hpp"
#include "codedist/parallel.hpp"

namespace codedist {

const char* strategy_name(SearchStrategy s) noexcept {
    switch (s) {
        case SearchStrategy::automatic: return "automatic";
        case SearchStrategy::enumerate: return "enumerate";
        case SearchStrategy::threshold: return "threshold";
    }
    return "?";
}

std::uint64_t enumeration_cost(std::size_t dim, std::size_t i, std::uint64_t q) {
    return sat_mul(gaussian_binomial_sat(static_cast<unsigned>(dim), static_cast<unsigned>(i), q),
                   projective_count(static_cast<unsigned>(i), q));
}

std::size_t span_min(const WeightTable& table, const std::vector<std::uint64_t>& rows, std::size_t floor) {
    const CoordSpace& sp = table.space;
    const Elem q = sp.field()->q();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto r : rows) {
        best = std::min<std::size_t>(best, table[r]);
        if (best <= floor) return best;
    }
    // Projective elements r_t + span(r_{t+1}, ..., r_{i-1}) for t from the last row up.
    std::vector<std::uint64_t> tail{0}, grown;
    for (std::size_t t = rows.size(); t-- > 0;) {
        for (auto s : tail) {
            if (s == 0) continue;
            best = std::min<std::size_t>(best, table[sp.add(rows[t], s)]);
            if (best <= floor) return best;
        }
        if (t == 0) break;
        grown = tail;
        for (Elem c = 1; c < q; ++c) {
            const std::uint64_t m = sp.scale(c, rows[t]);
            for (auto s : tail) grown.push_back(sp.add(m, s));
        }
        tail.swap(grown);
    }
    return best;
}

namespace {

std::vector<std::uint64_t> encode_rows(const CoordSpace& sp, const Matrix& m) {
    std::vector<std::uint64_t> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = sp.encode(m.row(r));
    return out;
}

struct SetResult {
    std::size_t value = 0;
    Matrix witness;
    bool done = false;
};

// Enumerates i-dim subspaces of F_q^dim; rows_of maps a coefficient RREF to row codes of the table space.
template <class RowsOf>
SubspaceOptimum enumerate_driver(const WeightTable& table, std::size_t dim, std::size_t i, std::size_t cap,
                                 Budget& budget, RowsOf&& rows_of) {
    const FieldPtr& field = table.space.field();
    budget.reserve(enumeration_cost(dim, i, field->q()));
    SubspaceEnumerator en(field, dim, i);
    const std::size_t sets = en.pivot_set_count();
    std::vector<SetResult> results(sets);
    const unsigned workers = budget.limits().workers;
    std::atomic<std::size_t> first_capped{sets};
    std::size_t running = 0;  // sequential floor across sets

    parallel_for(sets, workers, [&](std::size_t idx) {
        if (idx > first_capped.load(std::memory_order_relaxed)) return;
        SetResult& res = results[idx];
        std::size_t floor = workers <= 1 ? running : 0;
        bool capped = false;
        en.visit(idx, [&](const Matrix& m) {
            if (capped) return;
            const std::size_t v = std::min(cap, span_min(table, rows_of(m), floor));
            if (v > floor) {
                floor = v;
                res.value = v;
                res.witness = m;
                if (v >= cap) capped = true;
            }
        });
        res.done = true;
        if (workers <= 1) running = std::max(running, res.value);
        if (capped) {
            std::size_t cur = first_capped.load();
            while (idx < cur && !first_capped.compare_exchange_weak(cur, idx)) {
            }
        }
    });

    SubspaceOptimum best;
    best.used = SearchStrategy::enumerate;
    bool found = false;
    for (std::size_t idx = 0; idx < sets; ++idx) {
        const auto& r = results[idx];
        if (!r.done || r.witness.rows() != i) continue;
        if (!found || r.value > best.value) {
            best.value = r.value;
            best.basis = r.witness;
            found = true;
        }
    }
    if (!found) fail(Errc::internal, "subspace enumeration produced no candidate");
    return best;
}

class ThresholdSearch {
public:
    ThresholdSearch(const WeightTable& table, std::size_t i, std::size_t t, Budget& budget)
        : table_(table), sp_(table.space), q_(sp_.field()->q()), i_(i), t_(t), budget_(budget) {}

    bool run(std::vector<std::uint64_t>& basis) {
        std::vector<std::uint64_t> cand;
        budget_.charge(sp_.size());
        for (std::uint64_t x = 1; x < sp_.size(); ++x)
            if (table_[x] >= t_ && sp_.is_projective_rep(x)) cand.push_back(x);
        std::vector<std::uint64_t> span{0};
        basis.clear();
        return dfs(span, cand, basis);
    }

private:
    bool dfs(const std::vector<std::uint64_t>& span, const std::vector<std::uint64_t>& cand,
             std::vector<std::uint64_t>& basis) {
        const std::size_t d = basis.size();
        if (d == i_) return true;
        const std::uint64_t need_after = projective_count(static_cast<unsigned>(i_), q_) -
                                         projective_count(static_cast<unsigned>(d + 1), q_);
        std::vector<std::uint64_t> added, next_cand, next_span;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (cand.size() - a - 1 < need_after) return false;
            const std::uint64_t v = cand[a];
            added.clear();
            for (Elem c = 1; c < q_; ++c) {
                const std::uint64_t cv = sp_.scale(c, v);
                for (auto s : span) added.push_back(sp_.add(s, cv));
            }
            next_cand.clear();
            budget_.charge(sat_mul(cand.size() - a - 1, added.size()));
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                const std::uint64_t w = cand[b];
                bool ok = true;
                for (auto x : added)
                    if (table_[sp_.add(w, x)] < t_) {
                        ok = false;
                        break;
                    }
                if (ok) next_cand.push_back(w);
            }
            if (next_cand.size() < need_after) continue;
            next_span = span;
            next_span.insert(next_span.end(), added.begin(), added.end());
            basis.push_back(v);
            if (dfs(next_span, next_cand, basis)) return true;
            basis.pop_back();
        }
        return false;
    }

    const WeightTable& table_;
    const CoordSpace& sp_;
    Elem q_;
    std::size_t i_;
    std::size_t t_;
    Budget& budget_;
};

Matrix decode_rows(const CoordSpace& sp, const std::vector<std::uint64_t>& codes) {
    Matrix m(sp.field(), codes.size(), sp.dim());
    for (std::size_t r = 0; r < codes.size(); ++r) sp.decode(codes[r], m.row(r));
    return m;
}

}  // namespace

SubspaceOptimum max_min_subspace(const WeightTable& table, std::size_t i, std::size_t cap, Budget& budget,
                                 SearchStrategy strategy) {
    const CoordSpace& sp = table.space;
    if (i > sp.dim()) fail(Errc::invalid_argument, "subspace dimension exceeds the space");
    if (i == 0) return {cap, Matrix(sp.field(), 0, sp.dim()), SearchStrategy::enumerate};
    if (strategy == SearchStrategy::automatic)
        strategy = budget.fits(enumeration_cost(sp.dim(), i, sp.field()->q())) ? SearchStrategy::enumerate
                                                                                  : SearchStrategy::threshold;
    if (strategy == SearchStrategy::enumerate) {
        auto res = enumerate_driver(table, sp.dim(), i, cap, budget,
                                    [&](const Matrix& m) { return encode_rows(sp, m); });
        return res;
    }
    std::vector<std::uint64_t> basis;
    for (std::size_t t = cap; t >= 1; --t) {
        ThresholdSearch search(table, i, t, budget);
        if (search.run(basis)) return {t, row_basis(decode_rows(sp, basis)), SearchStrategy::threshold};
    }
    fail(Errc::internal, "threshold search found no subspace at t = 1");
}

SubspaceOptimum direct_supercode_search(const LinearCode& code, const WeightTable& ambient, std::size_t i,
                                        Budget& budget) {
    const CoordSpace& sp = ambient.space;
    if (sp.dim() != code.length()) fail(Errc::length_mismatch, "ambient table does not match the code");
    const std::size_t k = code.dim();
    if (i < k || i > code.length()) fail(Errc::invalid_argument, "supercode dimension out of range");
    const std::uint64_t q = sp.field()->q();
    const auto free = code.free_columns();
    std::vector<std::uint64_t> place(free.size());
    for (std::size_t t = 0; t < free.size(); ++t) place[t] = sat_pow(q, free[t]);
    const auto base_rows = encode_rows(sp, code.generator());

    // The same enumeration charge as the syndrome route, scaled to the codewords of D.
    const std::size_t j = i - k;
    budget.reserve(sat_mul(gaussian_binomial_sat(static_cast<unsigned>(free.size()), static_cast<unsigned>(j), q),
                           projective_count(static_cast<unsigned>(i), q)));
    SubspaceEnumerator en(sp.field(), free.size(), j);
    std::size_t best = 0;
    Matrix best_w;
    bool found = false;
    for (std::size_t idx = 0; idx < en.pivot_set_count(); ++idx) {
        en.visit(idx, [&](const Matrix& w) {
            std::vector<std::uint64_t> rows = base_rows;
            for (std::size_t r = 0; r < w.rows(); ++r) {
                std::uint64_t c = 0;
                for (std::size_t t = 0; t < free.size(); ++t) c += w(r, t) * place[t];
                rows.push_back(c);
            }
            const std::size_t v = span_min(ambient, rows, found ? best : 0);
            if (!found || v > best) {
                best = v;
                best_w = w;
                found = true;
            }
        });
    }
    Matrix basis = code.generator();
    for (std::size_t r = 0; r < best_w.rows(); ++r) basis.append_row(code.lift(best_w.row(r)));
    return {best, row_basis(basis), SearchStrategy::enumerate};
}

}  // namespace codedist
