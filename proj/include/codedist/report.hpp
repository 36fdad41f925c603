#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codedist/budget.hpp"
#include "codedist/codefile.hpp"
#include "codedist/invariants.hpp"

namespace codedist {

struct RunRequest {
    std::optional<std::pair<std::size_t, std::size_t>> alpha;  // inclusive, 1-based
    bool greedy = false;
    bool radii = false;
    bool mu = false;
    bool sld = false;
    bool bounds = false;
    unsigned extend = 0;      // degree, 0 = off
    unsigned asymptotic = 0;  // max degree, 0 = off
};

struct ReportEntry {
    std::size_t index = 0;
    std::optional<std::size_t> value;
    std::vector<std::vector<Elem>> witness;
    std::string route;
    std::string skipped;
    bool operator==(const ReportEntry&) const = default;
};

struct AsymptoticEntry {
    std::size_t index = 0;
    std::optional<std::size_t> value;
    unsigned stabilized_at = 0;
    unsigned swept = 0;
    bool constant_tail = false;
    bool certified = false;
    std::vector<std::size_t> per_degree;
    std::string marker;
    std::string skipped;
    bool operator==(const AsymptoticEntry&) const = default;
};

struct BoundsEntry {
    std::vector<std::size_t> ceiling;
    std::vector<std::size_t> floor_form;
    std::map<std::string, bool> flags;
    std::vector<std::string> notes;
    bool operator==(const BoundsEntry&) const = default;
};

struct Report {
    int schema = 1;
    std::string file_hash;
    unsigned p = 0, e = 0;
    std::uint64_t q = 0;
    std::string metric;
    std::string ambient;
    std::size_t length = 0, dim = 0;
    std::uint64_t budget = 0;
    std::uint64_t level_cap = 0;

    std::vector<ReportEntry> alpha;
    std::optional<std::vector<std::size_t>> greedy;
    std::vector<std::vector<Elem>> greedy_basis;
    std::vector<ReportEntry> rho;
    std::optional<std::size_t> mu;
    std::optional<bool> maximal;
    std::optional<std::vector<std::size_t>> sld;
    unsigned extend_degree = 0;
    std::vector<ReportEntry> extended;
    std::vector<AsymptoticEntry> asymptotic;
    std::optional<BoundsEntry> bounds;
    std::vector<std::string> skipped;  // "invariant: reason"
    std::uint64_t budget_spent = 0;
    bool budget_exceeded = false;

    bool operator==(const Report&) const = default;
};

/// Runs the requested invariants; a BudgetExceeded anywhere is recorded and the rest still run.
Report run_invariants(const LinearCode& code, const std::string& file_hash, const RunRequest& req, const Limits& limits);

std::string to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string to_tsv(const Report& r);

std::string to_json(const Comparison& c, const std::string& hash_a, const std::string& hash_b);
std::string to_tsv(const Comparison& c);

}  // namespace codedist
