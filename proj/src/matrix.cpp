#include "codedist/matrix.hpp"

#include <algorithm>
#include <cstdint>

#include "codedist/errors.hpp"
#include "codedist/simd/kernels.hpp"

namespace codedist {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(Errc::length_mismatch, "matrix data size does not match shape");
    for (Elem x : data_)
        if (x >= field_->q()) fail(Errc::invalid_argument, "matrix entry out of field range");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    std::vector<Elem> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) fail(Errc::length_mismatch, "ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
    std::vector<std::vector<Elem>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
    return out;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_) fail(Errc::length_mismatch, "appended row length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) fail(Errc::length_mismatch, "matrix product shape");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) field_->axpy(out.row(r), (*this)(r, k), rhs.row(k));
    return out;
}

std::vector<Elem> Matrix::combine(std::span<const Elem> coeffs) const {
    if (coeffs.size() != rows_) fail(Errc::length_mismatch, "combination length");
    std::vector<Elem> out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) field_->axpy(out, coeffs[r], row(r));
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix out(field_, 0, cols_);
    for (auto r : idx) out.append_row(row(r));
    return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
    Matrix out(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
    return out;
}

Matrix Matrix::stack(const Matrix& below) const {
    if (below.cols_ != cols_) fail(Errc::length_mismatch, "stacked matrices differ in width");
    Matrix out = *this;
    out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
    out.rows_ += below.rows_;
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& other) const noexcept {
    const bool same_field = field_ == other.field_ ||
                            (field_ && other.field_ && field_->q() == other.field_->q() && field_->p() == other.field_->p());
    return same_field && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

Rref rref_binary(const Matrix& m) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> bits(m.rows() * words, 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c)) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    auto rowp = [&](std::size_t r) { return bits.data() + r * words; };
    const auto& k = simd::active();

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t sel = lead;
        while (sel < m.rows() && !(rowp(sel)[c / 64] & mask)) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead) std::swap_ranges(rowp(sel), rowp(sel) + words, rowp(lead));
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != lead && (rowp(r)[c / 64] & mask)) k.xor_words(rowp(r), rowp(lead), words);
        pivots.push_back(c);
        ++lead;
    }
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = (rowp(r)[c / 64] >> (c % 64)) & 1u;
    return {std::move(out), std::move(pivots)};
}

}  // namespace

Rref rref_generic(const Matrix& m) {
    Matrix a = m;
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    std::vector<Elem> tmp(m.cols());
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < m.rows() && a(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(lead).begin());
        f.scale(a.row(lead), f.inv(a(lead, c)));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || a(r, c) == 0) continue;
            f.axpy(a.row(r), f.neg(a(r, c)), a.row(lead));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

Rref rref(const Matrix& m) {
    if (m.field() && m.field()->q() == 2) return rref_binary(m);
    return rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix row_basis(const Matrix& m) {
    auto r = rref(m);
    std::vector<std::size_t> idx(r.rank());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return r.matrix.select_rows(idx);
}

bool is_rref(const Matrix& m) {
    std::size_t last = 0;
    bool seen_zero_row = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = 0;
        while (c < m.cols() && m(r, c) == 0) ++c;
        if (c == m.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row || m(r, c) != 1 || (r > 0 && c <= last)) return false;
        for (std::size_t o = 0; o < m.rows(); ++o)
            if (o != r && m(o, c) != 0) return false;
        last = c;
    }
    return true;
}

Matrix kernel(const Matrix& m) {
    auto red = rref(m);
    const Field& f = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;
    Matrix out(m.field(), 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = f.neg(red.matrix(i, free));
        out.append_row(v);
    }
    return out;
}

bool in_rowspace(const Matrix& basis, std::span<const std::size_t> pivots, std::span<const Elem> v) {
    const Field& f = *basis.field();
    std::vector<Elem> r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const Elem c = r[pivots[i]];
        if (c != 0) f.axpy(r, f.neg(c), basis.row(i));
    }
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

std::vector<Elem> coordinates(const Matrix& basis, std::span<const std::size_t> pivots, std::span<const Elem> v) {
    if (!in_rowspace(basis, pivots, v)) fail(Errc::invalid_argument, "vector is not in the row space");
    std::vector<Elem> c(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i) c[i] = v[pivots[i]];
    return c;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(Errc::not_invertible, "matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto red = rref(aug);
    if (red.rank() < n || red.pivots[n - 1] != n - 1) fail(Errc::not_invertible, "matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
    return inv;
}

}  // namespace codedist
