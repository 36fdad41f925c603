#pragma once

#include <string>
#include <vector>

#include "codedist/code.hpp"

namespace codedist {

/// F_q for a prime power q; InvalidArgument otherwise.
FieldPtr field_of_order(std::uint64_t q);

/// Every element of the field in ascending canonical order.
std::vector<Elem> all_points(const FieldPtr& field);

/// RS(A, k): evaluations of 1, x, ..., x^{k-1} on the points A.
LinearCode reed_solomon(const FieldPtr& field, const std::vector<Elem>& points, std::size_t k);
/// RS over all of F_q.
LinearCode reed_solomon(const FieldPtr& field, std::size_t k);

/// Row space of the evaluations of the given polynomials (coefficients low degree first) on the points.
LinearCode evaluation_code(const FieldPtr& field, const std::vector<Elem>& points,
                           const std::vector<std::vector<Elem>>& polynomials);
/// The twisted code <1, x, x^2 - a x^6, x^3> on F_9 with a the Conway generator.
LinearCode twisted_rs_f9();

/// Gabidulin code with rows (a_j^{p^i}), i < k, over F_{p^m}, shown in F_p^{m x n}.
LinearCode gabidulin(const FieldPtr& ext_field, const std::vector<Elem>& points, std::size_t k);

LinearCode simplex(std::uint64_t q, std::size_t k);
LinearCode even_weight(std::size_t n);
/// [mk, k, m] rank-metric Hadamard code over F_q, q prime: the columns beta^s e_i of the generator run
/// through an F_q-basis of F_{q^m}^k.
LinearCode hadamard_rank(std::uint64_t q, std::size_t m, std::size_t k);

/// Literal example codes, addressed by name.
LinearCode builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace codedist
