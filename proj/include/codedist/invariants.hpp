#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "codedist/code.hpp"
#include "codedist/search.hpp"
#include "codedist/tables.hpp"

namespace codedist {

enum class SupercodeRoute { automatic, direct, radii };

const char* route_name(SupercodeRoute r) noexcept;

/// One code distance with an optimal sub- or supercode (canonical generator in ambient coordinates).
struct DistanceResult {
    std::size_t value = 0;
    Matrix witness;
    std::string route;
};

/// Caches the weight tables of one code so that a profile pays for each table once.
class Analyzer {
public:
    Analyzer(const LinearCode& code, Budget& budget);

    const LinearCode& code() const noexcept { return code_; }
    Budget& budget() const noexcept { return budget_; }

    std::size_t min_distance();
    std::size_t max_weight();
    const WeightTable& codewords();
    const WeightTable& coset_leaders();
    const WeightTable& ambient_weights();

    /// alpha_i for 1 <= i <= k.
    DistanceResult subcode(std::size_t i, SearchStrategy strategy = SearchStrategy::automatic);
    /// alpha_i for k <= i <= N.
    DistanceResult supercode(std::size_t i, SupercodeRoute route = SupercodeRoute::automatic);
    /// alpha_i for any 1 <= i <= N.
    DistanceResult alpha(std::size_t i);
    /// rho_j for 1 <= j <= N - k; the witness is C + D.
    DistanceResult radius(std::size_t j, SearchStrategy strategy = SearchStrategy::automatic);
    std::size_t covering_radius();

    std::uint64_t radii_cost(std::size_t i);
    std::uint64_t direct_cost(std::size_t i);

private:
    Matrix lift_syndromes(const Matrix& rows) const;

    LinearCode code_;
    Budget& budget_;
    std::optional<std::size_t> dmin_;
    std::optional<std::size_t> maxwt_;
    std::optional<WeightTable> codewords_;
    std::optional<WeightTable> cosets_;
    std::optional<WeightTable> ambient_;
    std::map<std::size_t, DistanceResult> alpha_cache_;
};

DistanceResult subcode_distance(const LinearCode& code, std::size_t i, Budget& budget);
DistanceResult supercode_distance(const LinearCode& code, std::size_t i, Budget& budget,
                                  SupercodeRoute route = SupercodeRoute::automatic);
std::size_t covering_radius(const LinearCode& code, Budget& budget);
std::size_t generalized_radius(const LinearCode& code, std::size_t j, Budget& budget);
/// min(d_min, rho_{i-k}).
std::size_t supercode_via_radii(const LinearCode& code, std::size_t i, Budget& budget);

struct IndexEntry {
    std::size_t index = 0;
    std::optional<std::size_t> value;
    Matrix witness;
    std::string route;
    std::string skipped;  // reason when value is absent
};

struct InvariantProfile {
    std::size_t length = 0;
    std::size_t dim = 0;
    std::vector<IndexEntry> alpha;
};

/// alpha_i for first <= i <= last; a BudgetExceeded at one index is recorded there and the rest still run.
InvariantProfile distance_profile(const LinearCode& code, std::size_t first, std::size_t last, Budget& budget);
InvariantProfile distance_profile(Analyzer& analyzer, std::size_t first, std::size_t last);
/// The values of a profile, throwing when an index was skipped.
std::vector<std::size_t> values(const InvariantProfile& p);

struct GreedyChain {
    /// D_1 subset ... subset D_N, canonical generators; D_k is the code itself.
    std::vector<Matrix> codes;
    /// v_i in D_i \ D_{i-1}, so D_i = <v_1, ..., v_i>.
    Matrix basis;
};

struct GreedyProfile {
    std::vector<std::size_t> values;  // alpha^g_1 .. alpha^g_N
    GreedyChain chain;
    std::vector<std::size_t> level_sizes;
};

GreedyProfile greedy_profile(const LinearCode& code, Budget& budget);
GreedyProfile greedy_profile(Analyzer& analyzer);

/// d_min - alpha_{k+1}; NotApplicable for the full space.
std::size_t maximality_degree(const LinearCode& code, Budget& budget);
std::size_t maximality_degree(Analyzer& analyzer);
bool is_maximal(const LinearCode& code, Budget& budget);

struct PartialDistanceProfile {
    Matrix matrix;
    std::vector<std::size_t> deltas;
    std::optional<double> exponent;
    std::optional<double> exponent_ceiling;
};

/// delta_i = min weight of a_i + <a_1, ..., a_{i-1}> under the ambient's weight.
PartialDistanceProfile partial_distances(const Matrix& a, const Ambient& ambient, Budget& budget);
PartialDistanceProfile partial_distances(const Matrix& a, Budget& budget);

struct ExponentResult {
    double value = 0;
    double ceiling = 0;
};
ExponentResult exponent(const Matrix& a, Budget& budget);
double exponent_of(const std::vector<std::size_t>& deltas);
double exponent_ceiling(std::size_t n);

/// A generator whose row weights and partial distances are the greedy subcode distances.
Matrix greedy_generator(const LinearCode& code, Budget& budget);

struct GreedyLowerBound {
    /// d_min(<c_1, ..., c_k>) at every index: a lower bound on each alpha^g_i.
    std::vector<std::size_t> span_bound;
    /// d_min of the first i rows after sorting by weight, descending: a lower bound on each alpha_i.
    std::vector<std::size_t> prefix_bound;
};
GreedyLowerBound greedy_lower_bound(const LinearCode& code, const Matrix& basis, Budget& budget);

/// alpha_i of C tensor F_{q^l}; i counts dimensions over F_{q^l}.
std::size_t extended_distance(const LinearCode& code, unsigned degree, std::size_t i, Budget& budget);

struct AsymptoticResult {
    std::size_t value = 0;
    unsigned stabilized_at = 1;
    unsigned swept = 0;
    bool constant_tail = false;
    bool certified = false;
    std::vector<std::size_t> per_degree;  // alpha_i^l for l = 1..swept
    std::string marker() const;
};
AsymptoticResult asymptotic_distance(const LinearCode& code, std::size_t i, unsigned max_degree, Budget& budget);

/// R_l(C) = rho(C tensor F_{q^l}).
std::size_t generalized_covering_radius(const LinearCode& code, unsigned degree, Budget& budget);

struct SingletonProfile {
    std::vector<std::size_t> ceiling;  // per index 1..N
    /// Rank metric only: n - floor(i/m) + 1 as printed, capped at n.
    std::vector<std::size_t> floor_form;
    bool is_mds = false;
    bool is_mrd = false;
    bool is_qmrd = false;
    bool is_msrd = false;
    std::vector<std::string> notes;
};
SingletonProfile singleton_profile(const LinearCode& code, Budget& budget);
/// Largest d allowed for an i-dimensional code by the Singleton bound of the ambient.
std::size_t singleton_ceiling(const Ambient& ambient, std::size_t i);

struct CodeSummary {
    InvariantProfile alpha;
    std::optional<std::vector<std::size_t>> greedy;
    std::optional<std::vector<std::size_t>> rho;
    std::optional<std::size_t> mu;
    std::optional<std::set<std::size_t>> sld;
    std::map<unsigned, std::vector<std::optional<std::size_t>>> extended;  // degree -> alpha^l
    std::vector<std::string> skipped;
};

struct CompareOptions {
    std::size_t first = 1;
    std::size_t last = 0;  // 0 = N
    bool greedy = true;
    bool radii = true;
    bool mu = true;
    bool sld = true;
    unsigned asymptotic = 0;  // sweep degrees 2..asymptotic when > 1
};

struct Comparison {
    CodeSummary a;
    CodeSummary b;
    bool inequivalent = false;
    /// e.g. "alpha[3]: 7 vs 6"
    std::vector<std::string> differences;
    std::string verdict() const;
};

/// Side-by-side invariants; never claims equivalence.
Comparison compare_codes(const LinearCode& a, const LinearCode& b, const CompareOptions& opts, Budget& budget);

}  // namespace codedist
