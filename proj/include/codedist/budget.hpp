#pragma once

#include <atomic>
#include <cstdint>
#include <limits>

namespace codedist {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept { return b > kSaturated - a ? kSaturated : a + b; }
/// q^n, saturating.
std::uint64_t sat_pow(std::uint64_t q, std::uint64_t n) noexcept;

struct Limits {
    std::uint64_t budget = 100'000'000;  // weight evaluations
    std::size_t level_cap = 1'000'000;   // greedy level-set size
    unsigned workers = 1;
};

/// Limits with the budget taken from CODEDIST_BUDGET when set.
Limits default_limits();

/// Shared work counter; the unit is one weight evaluation. Every enumerative operation debits it.
class Budget {
public:
    Budget() : Budget(default_limits()) {}
    explicit Budget(const Limits& limits);
    Budget(const Budget&) = delete;
    Budget& operator=(const Budget&) = delete;

    const Limits& limits() const noexcept { return limits_; }
    std::uint64_t spent() const noexcept { return spent_.load(std::memory_order_relaxed); }
    std::uint64_t remaining() const noexcept;
    bool fits(std::uint64_t estimate) const noexcept { return estimate <= remaining(); }
    /// Debit an up-front estimate, refusing (BudgetExceeded) when it does not fit.
    void reserve(std::uint64_t estimate);
    /// Debit incrementally; throws once the total passes the limit.
    void charge(std::uint64_t n);

private:
    Limits limits_;
    std::atomic<std::uint64_t> spent_{0};
};

}  // namespace codedist
