#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "codedist/budget.hpp"
#include "codedist/matrix.hpp"

namespace codedist {

/// [k choose i]_q exactly; nullopt when the value does not fit in 64 bits.
std::optional<std::uint64_t> gaussian_binomial(unsigned k, unsigned i, std::uint64_t q);
/// Saturating variant used by budget estimates.
std::uint64_t gaussian_binomial_sat(unsigned k, unsigned i, std::uint64_t q);
/// Number of 1-dimensional subspaces of F_q^i, (q^i - 1)/(q - 1).
std::uint64_t projective_count(unsigned i, std::uint64_t q);

/// Dense integer encoding of F_q^dim: v -> sum v_t q^t. In characteristic 2 vector addition is XOR of codes.
class CoordSpace {
public:
    CoordSpace(FieldPtr field, std::size_t dim);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t size() const noexcept { return size_; }

    std::uint64_t encode(std::span<const Elem> v) const;
    void decode(std::uint64_t code, std::span<Elem> out) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t scale(Elem c, std::uint64_t a) const noexcept;
    /// True when the lowest-index nonzero coordinate equals 1 (one representative per scalar class).
    bool is_projective_rep(std::uint64_t a) const noexcept;
    /// All projective representatives in increasing code order.
    std::vector<std::uint64_t> projective_points() const;

private:
    FieldPtr field_;
    std::size_t dim_;
    std::uint64_t q_;
    std::uint64_t size_;
    bool char2_;
    std::vector<Elem> add_digit_;  // q*q digit sums for odd characteristic (q <= 2^12)
};

/// Every i-dimensional subspace of F_q^k exactly once as its RREF basis: pivot sets in lexicographic order,
/// then the free entries in odometer order. Pivot sets are the unit of work splitting.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(FieldPtr field, std::size_t k, std::size_t i);

    std::size_t k() const noexcept { return k_; }
    std::size_t dim() const noexcept { return i_; }
    std::uint64_t count() const noexcept { return count_; }

    std::size_t pivot_set_count() const noexcept { return pivot_sets_.size(); }
    const std::vector<std::size_t>& pivot_set(std::size_t idx) const noexcept { return pivot_sets_[idx]; }
    std::uint64_t pivot_set_size(std::size_t idx) const noexcept;

    /// Calls fn(const Matrix&) for each subspace with the given pivot set, in odometer order.
    template <class Fn>
    void visit(std::size_t pivot_set_index, Fn&& fn) const;

    /// Sequential cursor across all pivot sets.
    bool next();
    const Matrix& current() const noexcept { return current_; }
    void reset();

private:
    struct Slot {
        std::size_t row;
        std::size_t col;
    };
    std::vector<Slot> free_slots(const std::vector<std::size_t>& pivots) const;
    Matrix base_matrix(const std::vector<std::size_t>& pivots) const;

    FieldPtr field_;
    std::size_t k_;
    std::size_t i_;
    std::uint64_t count_;
    std::vector<std::vector<std::size_t>> pivot_sets_;

    // cursor state
    std::size_t cursor_set_ = 0;
    bool started_ = false;
    std::vector<Slot> cursor_slots_;
    std::vector<Elem> cursor_digits_;
    Matrix current_;
};

template <class Fn>
void SubspaceEnumerator::visit(std::size_t pivot_set_index, Fn&& fn) const {
    const auto& pivots = pivot_sets_[pivot_set_index];
    const auto slots = free_slots(pivots);
    Matrix m = base_matrix(pivots);
    const Elem q = field_->q();
    std::vector<Elem> digits(slots.size(), 0);
    while (true) {
        fn(static_cast<const Matrix&>(m));
        std::size_t t = 0;
        while (t < slots.size()) {
            if (++digits[t] < q) {
                m(slots[t].row, slots[t].col) = digits[t];
                break;
            }
            digits[t] = 0;
            m(slots[t].row, slots[t].col) = 0;
            ++t;
        }
        if (t == slots.size()) return;
    }
}

/// Subspaces of the row space of `basis` (rank k) of dimension i, in ambient coordinates.
class SubspaceRange {
public:
    SubspaceRange(const Matrix& basis, std::size_t i, const Budget& budget);

    const SubspaceEnumerator& coefficients() const noexcept { return enumerator_; }
    std::uint64_t count() const noexcept { return enumerator_.count(); }
    bool next();
    /// Current subspace in ambient coordinates: coefficient RREF times the basis, re-reduced.
    Matrix current() const;
    const Matrix& current_coefficients() const noexcept { return enumerator_.current(); }

private:
    Matrix basis_;
    SubspaceEnumerator enumerator_;
};

SubspaceRange enumerate_subspaces(const Matrix& basis, std::size_t i, const Budget& budget);

/// Every i-dimensional D containing the row space of an RREF code basis (k x N), via (i-k)-dimensional
/// subspaces of the span of the unit vectors on its non-pivot columns.
class SupercodeRange {
public:
    SupercodeRange(const Matrix& code_rref, std::span<const std::size_t> pivots, std::size_t i, const Budget& budget);

    std::uint64_t count() const noexcept { return enumerator_.count(); }
    bool next();
    /// Canonical basis of the current supercode.
    Matrix current() const;
    const SubspaceEnumerator& complement_enumerator() const noexcept { return enumerator_; }
    /// Lift of a complement-coordinate matrix onto the non-pivot columns.
    Matrix lift(const Matrix& complement_rows) const;

private:
    Matrix code_;
    std::vector<std::size_t> free_cols_;
    SubspaceEnumerator enumerator_;
};

SupercodeRange enumerate_supercodes(const Matrix& code_rref, std::span<const std::size_t> pivots, std::size_t i,
                                    const Budget& budget);

}  // namespace codedist
