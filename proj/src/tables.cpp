#include "codedist/tables.hpp"

#include <algorithm>
#include <unordered_set>

#include "codedist/errors.hpp"

namespace codedist {

std::size_t WeightTable::max() const noexcept {
    return weight.empty() ? 0 : *std::max_element(weight.begin(), weight.end());
}

WeightTable codeword_table(const LinearCode& code, Budget& budget) {
    return WeightTable{CoordSpace(code.field(), code.dim()), codeword_weight_table(code, budget)};
}

WeightTable coset_leader_table(const LinearCode& code, Budget& budget) {
    const std::size_t r = code.length() - code.dim();
    CoordSpace space(code.field(), r);
    const std::uint64_t size = space.size();
    if (size > (std::uint64_t{1} << 28)) throw BudgetExceeded(size, budget.limits().budget);

    std::vector<std::uint64_t> steps;
    {
        std::unordered_set<std::uint64_t> seen;
        for (const auto& g : code.ambient().unit_generators()) {
            const std::uint64_t s = space.encode(code.syndrome(g));
            if (s != 0 && seen.insert(s).second) steps.push_back(s);
        }
        std::sort(steps.begin(), steps.end());
    }
    budget.reserve(sat_mul(size, std::max<std::uint64_t>(steps.size(), 1)));

    constexpr std::uint8_t unseen = 0xff;
    std::vector<std::uint8_t> dist(size, unseen);
    dist[0] = 0;
    std::vector<std::uint64_t> frontier{0}, next;
    for (std::uint8_t d = 1; !frontier.empty(); ++d) {
        if (d == unseen) fail(Errc::internal, "coset leader weight overflow");
        next.clear();
        for (auto s : frontier)
            for (auto g : steps) {
                const std::uint64_t t = space.add(s, g);
                if (dist[t] == unseen) {
                    dist[t] = d;
                    next.push_back(t);
                }
            }
        frontier.swap(next);
    }
    if (std::find(dist.begin(), dist.end(), unseen) != dist.end())
        fail(Errc::internal, "weight-1 vectors do not span the ambient");
    return WeightTable{std::move(space), std::move(dist)};
}

WeightTable ambient_table(const Ambient& ambient, Budget& budget) {
    CoordSpace space(ambient.field(), ambient.dim());
    if (space.size() > kAmbientTableLimit) throw BudgetExceeded(space.size(), kAmbientTableLimit);
    const std::uint64_t q = ambient.field()->q();
    budget.reserve(projective_count(static_cast<unsigned>(ambient.dim()), q));
    std::vector<std::uint8_t> w(space.size(), 0);
    std::vector<Elem> v(ambient.dim());
    for (std::uint64_t x = 1; x < space.size(); ++x) {
        if (!space.is_projective_rep(x)) continue;
        space.decode(x, v);
        const auto wt = static_cast<std::uint8_t>(ambient.weight(v));
        for (Elem c = 1; c < q; ++c) w[space.scale(c, x)] = wt;
    }
    return WeightTable{std::move(space), std::move(w)};
}

}  // namespace codedist
