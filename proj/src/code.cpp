#include "codedist/code.hpp"

#include <algorithm>
#include <numeric>

#include "codedist/enumerate.hpp"
#include "codedist/errors.hpp"

namespace codedist {

namespace {

Matrix canonical(const Matrix& m) { return row_basis(m); }

void require_hamming(const LinearCode& c, const char* op) {
    if (c.ambient().metric() != Metric::hamming)
        fail(Errc::invalid_argument, std::string(op) + " is defined for Hamming-metric codes");
}

// Visits every codeword x G (x in F_q^k, x encoded as sum x_t q^t) in increasing code order.
template <class Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn) {
    const Field& f = *code.field();
    const Elem q = f.q();
    const std::size_t k = code.dim();
    const Matrix& g = code.generator();
    std::vector<Elem> cur(code.length(), 0), digits(k, 0);
    std::uint64_t x = 0;
    const std::uint64_t total = sat_pow(q, k);
    while (true) {
        fn(static_cast<std::span<const Elem>>(cur), x, std::span<const Elem>(digits));
        if (++x >= total) return;
        for (std::size_t t = 0; t < k; ++t) {
            const Elem old = digits[t];
            const Elem nxt = old + 1 < q ? old + 1 : 0;
            digits[t] = nxt;
            f.axpy(cur, f.sub(nxt, old), g.row(t));
            if (nxt != 0) break;
        }
    }
}

bool leading_is_one(std::span<const Elem> digits) {
    for (Elem d : digits)
        if (d != 0) return d == 1;
    return false;
}

std::uint64_t combinations(std::size_t n, std::size_t s) {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= s; ++i) r = sat_mul(r, n - s + i) / i;
    return r;
}

// Calls fn(indices) for every s-subset of {0..n-1} in lexicographic order until fn returns true.
template <class Fn>
bool any_subset(std::size_t n, std::size_t s, Fn&& fn) {
    if (s > n) return false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        std::size_t t = s;
        while (t > 0 && idx[t - 1] == n - s + t - 1) --t;
        if (t == 0) return false;
        ++idx[t - 1];
        for (std::size_t u = t; u < s; ++u) idx[u] = idx[u - 1] + 1;
    }
}

}  // namespace

LinearCode::LinearCode(Ambient ambient, const Matrix& generator) : ambient_(std::move(ambient)) {
    if (generator.cols() != ambient_.dim()) fail(Errc::length_mismatch, "generator width does not match the ambient");
    if (generator.field() && generator.field()->q() != ambient_.field()->q())
        fail(Errc::incompatible_fields, "generator and ambient use different fields");
    auto r = rref(Matrix(ambient_.field(), generator.rows(), generator.cols(), generator.data()));
    std::vector<std::size_t> idx(r.rank());
    std::iota(idx.begin(), idx.end(), 0);
    gen_ = r.matrix.select_rows(idx);
    pivots_ = std::move(r.pivots);
}

LinearCode LinearCode::from_extension(FieldPtr base, FieldPtr ext_field, const Matrix& ext_generator) {
    if (!base->is_prime_field() || base->p() != ext_field->p())
        fail(Errc::incompatible_fields, "extension view needs F_p inside F_{p^m}");
    const std::size_t m = ext_field->e();
    const std::size_t n = ext_generator.cols();
    const Matrix eg = canonical(ext_generator);
    const Field& F = *ext_field;
    const Elem p = base->p();
    Matrix expanded(base, 0, m * n);
    std::vector<Elem> v(m * n);
    for (std::size_t r = 0; r < eg.rows(); ++r) {
        Elem beta = 1;
        for (std::size_t s = 0; s < m; ++s) {
            for (std::size_t j = 0; j < n; ++j) {
                Elem x = F.mul(beta, eg(r, j));
                for (std::size_t i = 0; i < m; ++i) {
                    v[i * n + j] = x % p;
                    x /= p;
                }
            }
            expanded.append_row(v);
            beta = F.mul(beta, F.generator());
        }
    }
    LinearCode code(Ambient::rank(base, m, n), expanded);
    code.ext_ = ExtensionView{ext_field, static_cast<unsigned>(m), eg};
    return code;
}

LinearCode LinearCode::full_space(const Ambient& ambient) {
    return LinearCode(ambient, Matrix::identity(ambient.field(), ambient.dim()));
}

bool LinearCode::contains(const LinearCode& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.generator().row(r))) return false;
    return true;
}

std::vector<std::size_t> LinearCode::free_columns() const {
    std::vector<bool> is_pivot(length(), false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < length(); ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

std::vector<Elem> LinearCode::syndrome(std::span<const Elem> v) const {
    const Field& f = *field();
    std::vector<Elem> r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Elem c = r[pivots_[i]];
        if (c != 0) f.axpy(r, f.neg(c), gen_.row(i));
    }
    std::vector<Elem> s;
    s.reserve(length() - dim());
    for (auto c : free_columns()) s.push_back(r[c]);
    return s;
}

std::vector<Elem> LinearCode::lift(std::span<const Elem> syndrome) const {
    const auto cols = free_columns();
    if (syndrome.size() != cols.size()) fail(Errc::length_mismatch, "syndrome length");
    std::vector<Elem> v(length(), 0);
    for (std::size_t t = 0; t < cols.size(); ++t) v[cols[t]] = syndrome[t];
    return v;
}

bool LinearCode::operator==(const LinearCode& other) const noexcept {
    return ambient_ == other.ambient_ && gen_.data() == other.gen_.data() && gen_.rows() == other.gen_.rows();
}

std::vector<std::uint8_t> codeword_weight_table(const LinearCode& code, Budget& budget) {
    const std::uint64_t q = code.field()->q();
    const std::uint64_t size = sat_pow(q, code.dim());
    if (size > (std::uint64_t{1} << 28)) throw BudgetExceeded(size, budget.limits().budget);
    if (code.ambient().max_weight() > 255) fail(Errc::invalid_argument, "weights above 255 are not tabulated");
    budget.reserve(projective_count(static_cast<unsigned>(code.dim()), q));
    std::vector<std::uint8_t> table(size, 0);
    const CoordSpace space(code.field(), code.dim());
    for_each_codeword(code, [&](std::span<const Elem> v, std::uint64_t x, std::span<const Elem> digits) {
        if (!leading_is_one(digits)) return;
        const auto w = static_cast<std::uint8_t>(code.weight(v));
        for (Elem c = 1; c < q; ++c) table[space.scale(c, x)] = w;
    });
    return table;
}

namespace {

template <class Pick>
std::size_t extreme_weight(const LinearCode& code, Budget& budget, std::size_t init, Pick pick) {
    budget.reserve(projective_count(static_cast<unsigned>(code.dim()), code.field()->q()));
    std::size_t best = init;
    for_each_codeword(code, [&](std::span<const Elem> v, std::uint64_t, std::span<const Elem> digits) {
        if (leading_is_one(digits)) best = pick(best, code.weight(v));
    });
    return best;
}

}  // namespace

std::size_t min_distance(const LinearCode& code, Budget& budget) {
    if (code.dim() == 0) fail(Errc::not_applicable, "the zero code has no minimum distance");
    const std::uint64_t q = code.field()->q();
    const std::uint64_t direct = projective_count(static_cast<unsigned>(code.dim()), q);
    if (code.ambient().metric() == Metric::hamming && !budget.fits(direct)) {
        // Column-subset route: at most sum_{s <= n-k+1} C(n, s) rank tests.
        std::uint64_t est = 0;
        for (std::size_t s = 1; s <= code.length() - code.dim() + 1; ++s)
            est = sat_add(est, combinations(code.length(), s));
        if (est < direct) return min_distance_via_parity(parity_check(code), budget);
    }
    return extreme_weight(code, budget, code.ambient().max_weight() + 1,
                          [](std::size_t a, std::size_t b) { return std::min(a, b); });
}

std::size_t max_weight(const LinearCode& code, Budget& budget) {
    if (code.dim() == 0) return 0;
    return extreme_weight(code, budget, 0, [](std::size_t a, std::size_t b) { return std::max(a, b); });
}

LinearCode dual(const LinearCode& code) {
    if (const auto& ev = code.extension_view()) {
        const Matrix h = kernel(ev->generator);
        if (h.rows() == 0) return LinearCode(code.ambient(), Matrix(code.field(), 0, code.length()));
        return LinearCode::from_extension(code.field(), ev->ext_field, h);
    }
    if (code.ambient().metric() != Metric::hamming)
        fail(Errc::unsupported_dual, "duals of matrix rank-metric codes are not supported");
    return LinearCode(code.ambient(), kernel(code.generator()));
}

Matrix parity_check(const LinearCode& code) {
    if (const auto& ev = code.extension_view()) {
        Matrix h = kernel(ev->generator);
        if (h.rows() == 0) return Matrix(ev->ext_field, 1, ev->generator.cols());
        return h;
    }
    if (code.ambient().metric() != Metric::hamming)
        fail(Errc::unsupported_dual, "parity checks of matrix rank-metric codes are not supported");
    Matrix h = kernel(code.generator());
    if (h.rows() == 0) return Matrix(code.field(), 1, code.length());
    return h;
}

std::vector<std::vector<Elem>> columns(const Matrix& m) {
    std::vector<std::vector<Elem>> out(m.cols(), std::vector<Elem>(m.rows()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[c][r] = m(r, c);
    return out;
}

namespace {

Matrix as_rows(const std::vector<std::vector<Elem>>& vs, const std::vector<std::size_t>& idx, const FieldPtr& f) {
    Matrix m(f, 0, vs.front().size());
    for (auto i : idx) m.append_row(vs[i]);
    return m;
}

bool subset_dependent(const std::vector<std::vector<Elem>>& vs, const std::vector<std::size_t>& idx,
                      const FieldPtr& f) {
    return rank(as_rows(vs, idx, f)) < idx.size();
}

// True when some combination with every coefficient nonzero vanishes.
bool strongly_dependent(const std::vector<std::vector<Elem>>& vs, const std::vector<std::size_t>& idx,
                        const FieldPtr& field) {
    const Field& f = *field;
    const Elem q = f.q();
    const std::size_t len = vs.front().size();
    std::vector<Elem> coeff(idx.size(), 1), sum(len);
    while (true) {
        std::fill(sum.begin(), sum.end(), 0);
        for (std::size_t t = 0; t < idx.size(); ++t) f.axpy(sum, coeff[t], vs[idx[t]]);
        if (std::all_of(sum.begin(), sum.end(), [](Elem x) { return x == 0; })) return true;
        std::size_t t = 0;
        while (t < coeff.size()) {
            if (++coeff[t] < q) break;
            coeff[t] = 1;
            ++t;
        }
        if (t == coeff.size()) return false;
    }
}

void check_vectors(const std::vector<std::vector<Elem>>& vs) {
    if (vs.empty()) fail(Errc::invalid_argument, "empty vector list");
    for (const auto& v : vs)
        if (v.size() != vs.front().size()) fail(Errc::length_mismatch, "vectors differ in length");
}

}  // namespace

std::size_t min_distance_via_parity(const Matrix& h, Budget& budget) {
    const auto cols = columns(h);
    const std::size_t n = cols.size();
    for (std::size_t s = 1; s <= n; ++s) {
        budget.reserve(combinations(n, s));
        if (any_subset(n, s, [&](const auto& idx) { return subset_dependent(cols, idx, h.field()); })) return s;
    }
    fail(Errc::no_dependent_subset, "the columns are linearly independent");
}

bool is_sld(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field, Budget& budget) {
    check_vectors(vectors);
    budget.reserve(sat_pow(field->q() - 1, vectors.size()));
    std::vector<std::size_t> all(vectors.size());
    std::iota(all.begin(), all.end(), 0);
    return strongly_dependent(vectors, all, field);
}

std::size_t min_ld_card(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field, Budget& budget) {
    check_vectors(vectors);
    const std::size_t n = vectors.size();
    for (std::size_t s = 1; s <= n; ++s) {
        budget.reserve(combinations(n, s));
        if (any_subset(n, s, [&](const auto& idx) { return subset_dependent(vectors, idx, field); })) return s;
    }
    fail(Errc::no_dependent_subset, "the vectors are linearly independent");
}

std::size_t min_sld_card(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field, Budget& budget) {
    check_vectors(vectors);
    const std::size_t n = vectors.size();
    for (std::size_t s = 1; s <= n; ++s) {
        budget.reserve(sat_mul(combinations(n, s), sat_pow(field->q() - 1, s)));
        if (any_subset(n, s, [&](const auto& idx) { return strongly_dependent(vectors, idx, field); })) return s;
    }
    fail(Errc::no_dependent_subset, "the vectors are linearly independent");
}

std::set<std::size_t> sld_set(const LinearCode& code, Budget& budget) {
    require_hamming(code, "sld_set");
    std::set<std::size_t> out;
    if (code.dim() == 0) return out;
    budget.reserve(projective_count(static_cast<unsigned>(code.dim()), code.field()->q()));
    for_each_codeword(code, [&](std::span<const Elem> v, std::uint64_t, std::span<const Elem> digits) {
        if (leading_is_one(digits)) out.insert(code.weight(v));
    });
    return out;
}

LinearCode puncture(const LinearCode& code, std::size_t position) {
    require_hamming(code, "puncture");
    if (position >= code.length()) fail(Errc::position_out_of_range, "puncture position out of range");
    if (code.length() == 1) fail(Errc::invalid_argument, "cannot puncture a length-1 code");
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < code.length(); ++c)
        if (c != position) keep.push_back(c);
    return LinearCode(Ambient::hamming(code.field(), keep.size()), code.generator().select_cols(keep));
}

LinearCode shorten(const LinearCode& code, std::size_t position) {
    require_hamming(code, "shorten");
    if (position >= code.length()) fail(Errc::position_out_of_range, "shorten position out of range");
    if (code.length() == 1) fail(Errc::invalid_argument, "cannot shorten a length-1 code");
    // Coefficient vectors x with (x G)[position] = 0.
    Matrix col(code.field(), 1, code.dim());
    for (std::size_t r = 0; r < code.dim(); ++r) col(0, r) = code.generator()(r, position);
    const Matrix sub = code.dim() == 0 ? Matrix(code.field(), 0, 0) : kernel(col) * code.generator();
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < code.length(); ++c)
        if (c != position) keep.push_back(c);
    const Ambient amb = Ambient::hamming(code.field(), keep.size());
    if (sub.rows() == 0) return LinearCode(amb, Matrix(code.field(), 0, keep.size()));
    return LinearCode(amb, sub.select_cols(keep));
}

LinearCode extend_code(const LinearCode& code, unsigned degree) {
    if (degree == 0) fail(Errc::invalid_argument, "extension degree must be positive");
    if (degree == 1) return code;
    const FieldPtr& base = code.field();
    const FieldPtr target = Field::get(base->p(), base->e() * degree);
    const FieldEmbedding phi(base, target);
    const Matrix& g = code.generator();
    std::vector<Elem> data(g.data().size());
    std::transform(g.data().begin(), g.data().end(), data.begin(), [&](Elem a) { return phi(a); });
    return LinearCode(code.ambient().with_field(target), Matrix(target, g.rows(), g.cols(), std::move(data)));
}

}  // namespace codedist
