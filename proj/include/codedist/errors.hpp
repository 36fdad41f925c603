#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace codedist {

enum class Errc {
    not_prime,
    degree_too_large,
    no_conway_polynomial,
    division_by_zero,
    incompatible_fields,
    length_mismatch,
    budget_exceeded,
    unsupported_dual,
    no_dependent_subset,
    position_out_of_range,
    duplicate_points,
    k_too_large,
    dependent_polynomials,
    dependent_points,
    dimension_order,
    unknown_name,
    level_set_overflow,
    not_applicable,
    rank_deficient,
    not_invertible,
    not_a_basis,
    ambient_mismatch,
    parse_error,
    invalid_argument,
    internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t estimated, std::uint64_t budget);
    std::uint64_t estimated() const noexcept { return estimated_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t estimated_;
    std::uint64_t budget_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason);
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace codedist
