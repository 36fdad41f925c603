#include "codedist/budget.hpp"

#include <cstdlib>
#include <string>

#include "codedist/errors.hpp"

namespace codedist {

std::uint64_t sat_pow(std::uint64_t q, std::uint64_t n) noexcept {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n && r != kSaturated; ++i) r = sat_mul(r, q);
    return r;
}

Limits default_limits() {
    Limits l;
    if (const char* env = std::getenv("CODEDIST_BUDGET")) {
        try {
            l.budget = std::stoull(env);
        } catch (const std::exception&) {
            fail(Errc::invalid_argument, std::string("CODEDIST_BUDGET is not an integer: ") + env);
        }
    }
    return l;
}

Budget::Budget(const Limits& limits) : limits_(limits) {
    if (limits_.workers == 0) fail(Errc::invalid_argument, "workers must be >= 1");
}

std::uint64_t Budget::remaining() const noexcept {
    const std::uint64_t s = spent();
    return s >= limits_.budget ? 0 : limits_.budget - s;
}

void Budget::reserve(std::uint64_t estimate) {
    if (!fits(estimate)) throw BudgetExceeded(estimate, limits_.budget);
    spent_.fetch_add(estimate, std::memory_order_relaxed);
}

void Budget::charge(std::uint64_t n) {
    const std::uint64_t before = spent_.fetch_add(n, std::memory_order_relaxed);
    if (sat_add(before, n) > limits_.budget) throw BudgetExceeded(sat_add(before, n), limits_.budget);
}

}  // namespace codedist
