#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "codedist/ambient.hpp"
#include "codedist/budget.hpp"
#include "codedist/matrix.hpp"

namespace codedist {

/// An F_{q^m}-linear code of length n shown in rank-metric form F_q^{m x n}.
struct ExtensionView {
    FieldPtr ext_field;
    unsigned degree = 1;
    Matrix generator;  // k_ext x n over ext_field, RREF
};

/// F_q-linear subspace of an ambient, stored as its canonical RREF generator.
class LinearCode {
public:
    LinearCode(Ambient ambient, const Matrix& generator);

    /// Expands an F_{q^m}-linear code (generator over ext_field, length n) into F_q^{m x n}, q prime.
    static LinearCode from_extension(FieldPtr base, FieldPtr ext_field, const Matrix& ext_generator);
    static LinearCode full_space(const Ambient& ambient);

    const Ambient& ambient() const noexcept { return ambient_; }
    const FieldPtr& field() const noexcept { return ambient_.field(); }
    const Matrix& generator() const noexcept { return gen_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::size_t dim() const noexcept { return gen_.rows(); }
    std::size_t length() const noexcept { return ambient_.dim(); }
    const std::optional<ExtensionView>& extension_view() const noexcept { return ext_; }
    bool is_full_space() const noexcept { return dim() == length(); }

    std::size_t weight(std::span<const Elem> v) const { return ambient_.weight(v); }
    bool contains(std::span<const Elem> v) const { return in_rowspace(gen_, pivots_, v); }
    bool contains(const LinearCode& other) const;
    /// Non-pivot columns, the coordinates of the syndrome space F_q^{N-k}.
    std::vector<std::size_t> free_columns() const;
    /// v minus its projection on the pivot columns, read on the free columns.
    std::vector<Elem> syndrome(std::span<const Elem> v) const;
    /// The vector with the given syndrome supported on the free columns.
    std::vector<Elem> lift(std::span<const Elem> syndrome) const;

    bool operator==(const LinearCode& other) const noexcept;

private:
    Ambient ambient_;
    Matrix gen_;
    std::vector<std::size_t> pivots_;
    std::optional<ExtensionView> ext_;
};

/// Codeword weights over the coefficient space F_q^k, indexed by sum x_t q^t. Entry 0 is 0.
std::vector<std::uint8_t> codeword_weight_table(const LinearCode& code, Budget& budget);
std::size_t min_distance(const LinearCode& code, Budget& budget);
std::size_t max_weight(const LinearCode& code, Budget& budget);

LinearCode dual(const LinearCode& code);
Matrix parity_check(const LinearCode& code);
/// Smallest number of linearly dependent columns of H.
std::size_t min_distance_via_parity(const Matrix& h, Budget& budget);

bool is_sld(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field, Budget& budget);
std::size_t min_ld_card(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field, Budget& budget);
std::size_t min_sld_card(const std::vector<std::vector<Elem>>& vectors, const FieldPtr& field, Budget& budget);
std::set<std::size_t> sld_set(const LinearCode& code, Budget& budget);
/// Columns of a matrix as vectors.
std::vector<std::vector<Elem>> columns(const Matrix& m);

LinearCode puncture(const LinearCode& code, std::size_t position);
LinearCode shorten(const LinearCode& code, std::size_t position);
/// C tensor F_{q^l}: the generator with entries embedded in the degree-l extension.
LinearCode extend_code(const LinearCode& code, unsigned degree);

}  // namespace codedist
