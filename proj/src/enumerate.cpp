#include "codedist/enumerate.hpp"

#include "codedist/errors.hpp"

namespace codedist {

__extension__ using u128 = unsigned __int128;

std::optional<std::uint64_t> gaussian_binomial(unsigned k, unsigned i, std::uint64_t q) {
    if (i > k) return 0;
    if (q < 2) fail(Errc::invalid_argument, "gaussian_binomial needs q >= 2");
    // G(k, j+1) = G(k, j) (q^{k-j} - 1) / (q^{j+1} - 1); every intermediate quotient is an integer.
    auto qpow = [&](unsigned n) -> std::optional<u128> {
        u128 r = 1;
        for (unsigned t = 0; t < n; ++t) {
            r *= q;
            if (r > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        }
        return r;
    };
    u128 g = 1;
    for (unsigned j = 0; j < i; ++j) {
        const auto num = qpow(k - j);
        const auto den = qpow(j + 1);
        if (!num || !den) return std::nullopt;
        const u128 prod = g * (*num - 1);
        if (g != 0 && prod / g != *num - 1) return std::nullopt;
        g = prod / (*den - 1);
        if (g > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    }
    return static_cast<std::uint64_t>(g);
}

std::uint64_t gaussian_binomial_sat(unsigned k, unsigned i, std::uint64_t q) {
    return gaussian_binomial(k, i, q).value_or(kSaturated);
}

std::uint64_t projective_count(unsigned i, std::uint64_t q) {
    return gaussian_binomial_sat(i, 1, q);
}

CoordSpace::CoordSpace(FieldPtr field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), q_(field_->q()), size_(sat_pow(field_->q(), dim)), char2_(field_->p() == 2) {
    if (size_ == kSaturated || size_ > (std::uint64_t{1} << 40))
        fail(Errc::invalid_argument, "coordinate space too large to index");
    if (!char2_ && q_ <= 4096) {
        add_digit_.resize(q_ * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_digit_[a * q_ + b] = field_->add(a, b);
    }
}

std::uint64_t CoordSpace::encode(std::span<const Elem> v) const {
    std::uint64_t code = 0;
    for (std::size_t t = v.size(); t-- > 0;) code = code * q_ + v[t];
    return code;
}

void CoordSpace::decode(std::uint64_t code, std::span<Elem> out) const {
    for (std::size_t t = 0; t < dim_; ++t) {
        out[t] = static_cast<Elem>(code % q_);
        code /= q_;
    }
}

std::uint64_t CoordSpace::add(std::uint64_t a, std::uint64_t b) const noexcept {
    if (char2_) return a ^ b;
    std::uint64_t r = 0, w = 1;
    for (std::size_t t = 0; t < dim_; ++t) {
        const auto da = static_cast<Elem>(a % q_), db = static_cast<Elem>(b % q_);
        a /= q_;
        b /= q_;
        const Elem s = add_digit_.empty() ? field_->add(da, db) : add_digit_[da * q_ + db];
        r += s * w;
        w *= q_;
    }
    return r;
}

std::uint64_t CoordSpace::scale(Elem c, std::uint64_t a) const noexcept {
    if (c == 1) return a;
    std::uint64_t r = 0, w = 1;
    for (std::size_t t = 0; t < dim_; ++t) {
        r += field_->mul(c, static_cast<Elem>(a % q_)) * w;
        a /= q_;
        w *= q_;
    }
    return r;
}

bool CoordSpace::is_projective_rep(std::uint64_t a) const noexcept {
    while (a != 0) {
        const auto d = a % q_;
        if (d != 0) return d == 1;
        a /= q_;
    }
    return false;
}

std::vector<std::uint64_t> CoordSpace::projective_points() const {
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(projective_count(static_cast<unsigned>(dim_), q_)));
    for (std::uint64_t a = 1; a < size_; ++a)
        if (is_projective_rep(a)) out.push_back(a);
    return out;
}

SubspaceEnumerator::SubspaceEnumerator(FieldPtr field, std::size_t k, std::size_t i)
    : field_(std::move(field)), k_(k), i_(i) {
    if (i > k) fail(Errc::invalid_argument, "subspace dimension exceeds ambient dimension");
    count_ = gaussian_binomial_sat(static_cast<unsigned>(k), static_cast<unsigned>(i), field_->q());
    // Lexicographic pivot combinations.
    std::vector<std::size_t> comb(i);
    for (std::size_t t = 0; t < i; ++t) comb[t] = t;
    while (true) {
        pivot_sets_.push_back(comb);
        std::size_t t = i;
        while (t > 0 && comb[t - 1] == k - i + t - 1) --t;
        if (t == 0) break;
        ++comb[t - 1];
        for (std::size_t u = t; u < i; ++u) comb[u] = comb[u - 1] + 1;
    }
}

std::vector<SubspaceEnumerator::Slot> SubspaceEnumerator::free_slots(const std::vector<std::size_t>& pivots) const {
    std::vector<bool> is_pivot(k_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Slot> slots;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = pivots[r] + 1; c < k_; ++c)
            if (!is_pivot[c]) slots.push_back({r, c});
    return slots;
}

Matrix SubspaceEnumerator::base_matrix(const std::vector<std::size_t>& pivots) const {
    Matrix m(field_, pivots.size(), k_);
    for (std::size_t r = 0; r < pivots.size(); ++r) m(r, pivots[r]) = 1;
    return m;
}

std::uint64_t SubspaceEnumerator::pivot_set_size(std::size_t idx) const noexcept {
    return sat_pow(field_->q(), free_slots(pivot_sets_[idx]).size());
}

bool SubspaceEnumerator::next() {
    const Elem q = field_->q();
    if (!started_) {
        started_ = true;
        cursor_set_ = 0;
        cursor_slots_ = free_slots(pivot_sets_[0]);
        cursor_digits_.assign(cursor_slots_.size(), 0);
        current_ = base_matrix(pivot_sets_[0]);
        return true;
    }
    std::size_t t = 0;
    while (t < cursor_slots_.size()) {
        if (++cursor_digits_[t] < q) {
            current_(cursor_slots_[t].row, cursor_slots_[t].col) = cursor_digits_[t];
            return true;
        }
        cursor_digits_[t] = 0;
        current_(cursor_slots_[t].row, cursor_slots_[t].col) = 0;
        ++t;
    }
    if (++cursor_set_ >= pivot_sets_.size()) return false;
    cursor_slots_ = free_slots(pivot_sets_[cursor_set_]);
    cursor_digits_.assign(cursor_slots_.size(), 0);
    current_ = base_matrix(pivot_sets_[cursor_set_]);
    return true;
}

void SubspaceEnumerator::reset() { started_ = false; }

namespace {

void guard(std::uint64_t count, unsigned i, std::uint64_t q, const Budget& budget) {
    const std::uint64_t estimate = sat_mul(count, projective_count(i, q));
    if (!budget.fits(estimate)) throw BudgetExceeded(estimate, budget.limits().budget);
}

}  // namespace

SubspaceRange::SubspaceRange(const Matrix& basis, std::size_t i, const Budget& budget)
    : basis_(basis), enumerator_(basis.field(), basis.rows(), i) {
    if (rank(basis) != basis.rows()) fail(Errc::rank_deficient, "subspace enumeration needs a basis");
    guard(enumerator_.count(), static_cast<unsigned>(i), basis.field()->q(), budget);
}

bool SubspaceRange::next() { return enumerator_.next(); }

Matrix SubspaceRange::current() const { return row_basis(enumerator_.current() * basis_); }

SubspaceRange enumerate_subspaces(const Matrix& basis, std::size_t i, const Budget& budget) {
    return SubspaceRange(basis, i, budget);
}

SupercodeRange::SupercodeRange(const Matrix& code_rref, std::span<const std::size_t> pivots, std::size_t i,
                               const Budget& budget)
    : code_(code_rref),
      free_cols_([&] {
          std::vector<bool> is_pivot(code_rref.cols(), false);
          for (auto p : pivots) is_pivot[p] = true;
          std::vector<std::size_t> f;
          for (std::size_t c = 0; c < code_rref.cols(); ++c)
              if (!is_pivot[c]) f.push_back(c);
          return f;
      }()),
      enumerator_(code_rref.field(), free_cols_.size(),
                  i >= code_rref.rows() ? i - code_rref.rows() : (fail(Errc::invalid_argument, "supercode dimension below k"), 0)) {
    if (i > code_rref.cols()) fail(Errc::invalid_argument, "supercode dimension exceeds ambient dimension");
    guard(enumerator_.count(), static_cast<unsigned>(i), code_rref.field()->q(), budget);
}

bool SupercodeRange::next() { return enumerator_.next(); }

Matrix SupercodeRange::lift(const Matrix& complement_rows) const {
    Matrix out(code_.field(), complement_rows.rows(), code_.cols());
    for (std::size_t r = 0; r < complement_rows.rows(); ++r)
        for (std::size_t j = 0; j < free_cols_.size(); ++j) out(r, free_cols_[j]) = complement_rows(r, j);
    return out;
}

Matrix SupercodeRange::current() const { return row_basis(code_.stack(lift(enumerator_.current()))); }

SupercodeRange enumerate_supercodes(const Matrix& code_rref, std::span<const std::size_t> pivots, std::size_t i,
                                    const Budget& budget) {
    return SupercodeRange(code_rref, pivots, i, budget);
}

}  // namespace codedist
