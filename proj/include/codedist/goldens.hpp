#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codedist/budget.hpp"

namespace codedist {

enum class GoldenStatus { pass, fail, disputed };

const char* golden_status_name(GoldenStatus s) noexcept;

/// A worked example with its published values. `corrected` holds the value an independent brute-force
/// check gives where the published one is wrong; matching it yields `disputed` instead of `pass`.
struct Golden {
    std::string name;
    std::vector<std::size_t> expected;
    std::optional<std::vector<std::size_t>> corrected;
    std::function<std::vector<std::size_t>(Budget&)> compute;
};

struct GoldenOutcome {
    std::string name;
    GoldenStatus status = GoldenStatus::fail;
    std::vector<std::size_t> expected;
    std::vector<std::size_t> computed;
    std::string detail;  // index-wise diff or error text
    double seconds = 0;
};

const std::vector<Golden>& golden_registry();

/// Runs every golden (or those whose name contains `filter`); `overrides` replaces expected values by name.
std::vector<GoldenOutcome> run_goldens(const Limits& limits, const std::string& filter = "",
                                       const std::map<std::string, std::vector<std::size_t>>& overrides = {});

std::string index_diff(const std::vector<std::size_t>& expected, const std::vector<std::size_t>& computed);

}  // namespace codedist
