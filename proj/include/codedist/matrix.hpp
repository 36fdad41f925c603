#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "codedist/field.hpp"

namespace codedist {

/// Dense row-major matrix over a Field. Zero-row matrices are allowed (e.g. the kernel of an invertible map).
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols = 0);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Elem>& data() const noexcept { return data_; }
    std::vector<std::vector<Elem>> to_rows() const;

    void append_row(std::span<const Elem> r);
    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    /// Row-vector times matrix: coeffs (length rows()) * M.
    std::vector<Elem> combine(std::span<const Elem> coeffs) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix select_cols(std::span<const std::size_t> idx) const;
    Matrix stack(const Matrix& below) const;
    bool is_zero() const noexcept;

    bool operator==(const Matrix& other) const noexcept;

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct Rref {
    Matrix matrix;                   // same shape as the input, zero rows at the bottom
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Unique reduced row echelon form; binary matrices go through a bit-packed XOR elimination.
Rref rref(const Matrix& m);
/// Generic elimination, bypassing the F_2 fast path (reference for equivalence tests).
Rref rref_generic(const Matrix& m);
std::size_t rank(const Matrix& m);
/// The nonzero rows of rref(m): the canonical basis of the row space.
Matrix row_basis(const Matrix& m);
/// Checks the pivot structure of an RREF matrix (pivot 1, sole nonzero in its column, increasing).
bool is_rref(const Matrix& m);
/// Basis of {x : m x^T = 0}, one row per free column, cols - rank rows.
Matrix kernel(const Matrix& m);
/// Membership of v in the row space of a canonical basis with the given pivots.
bool in_rowspace(const Matrix& basis, std::span<const std::size_t> pivots, std::span<const Elem> v);
/// Coefficients of v with respect to a canonical basis (v must lie in the row space).
std::vector<Elem> coordinates(const Matrix& basis, std::span<const std::size_t> pivots, std::span<const Elem> v);
/// Inverse of a square matrix; throws NotInvertible.
Matrix inverse(const Matrix& m);

}  // namespace codedist
