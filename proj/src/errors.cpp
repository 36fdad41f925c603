#include "codedist/errors.hpp"

namespace codedist {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::not_prime: return "NotPrime";
        case Errc::degree_too_large: return "DegreeTooLarge";
        case Errc::no_conway_polynomial: return "NoConwayPolynomial";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::incompatible_fields: return "IncompatibleFields";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::unsupported_dual: return "UnsupportedDual";
        case Errc::no_dependent_subset: return "NoDependentSubset";
        case Errc::position_out_of_range: return "PositionOutOfRange";
        case Errc::duplicate_points: return "DuplicatePoints";
        case Errc::k_too_large: return "KTooLarge";
        case Errc::dependent_polynomials: return "DependentPolynomials";
        case Errc::dependent_points: return "DependentPoints";
        case Errc::dimension_order: return "DimensionOrder";
        case Errc::unknown_name: return "UnknownName";
        case Errc::level_set_overflow: return "LevelSetOverflow";
        case Errc::not_applicable: return "NotApplicable";
        case Errc::rank_deficient: return "RankDeficient";
        case Errc::not_invertible: return "NotInvertible";
        case Errc::not_a_basis: return "NotABasis";
        case Errc::ambient_mismatch: return "AmbientMismatch";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t estimated, std::uint64_t budget)
    : Error(Errc::budget_exceeded, "BudgetExceeded(" + std::to_string(estimated) + ", " +
                                       std::to_string(budget) + ")"),
      estimated_(estimated),
      budget_(budget) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

void fail(Errc code, const std::string& what) { throw Error(code, std::string(errc_name(code)) + ": " + what); }

}  // namespace codedist
