#include "codedist/ambient.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "codedist/errors.hpp"
#include "codedist/simd/kernels.hpp"

namespace codedist {

const char* metric_name(Metric m) noexcept {
    switch (m) {
        case Metric::hamming: return "hamming";
        case Metric::rank: return "rank";
        case Metric::sum_rank: return "sumrank";
    }
    return "?";
}

Ambient::Ambient(FieldPtr field, Metric metric, std::vector<Block> blocks)
    : field_(std::move(field)), metric_(metric), blocks_(std::move(blocks)) {
    if (!field_) fail(Errc::invalid_argument, "ambient needs a field");
    if (blocks_.empty()) fail(Errc::invalid_argument, "ambient needs at least one coordinate");
    for (const auto& b : blocks_) {
        if (b.m == 0 || b.n == 0) fail(Errc::invalid_argument, "matrix blocks must be nonempty");
        dim_ += b.m * b.n;
        max_weight_ += std::min(b.m, b.n);
    }
}

Ambient Ambient::hamming(FieldPtr field, std::size_t n) {
    return Ambient(std::move(field), Metric::hamming, std::vector<Block>(n, Block{1, 1}));
}

Ambient Ambient::rank(FieldPtr field, std::size_t m, std::size_t n) {
    return Ambient(std::move(field), Metric::rank, {Block{m, n}});
}

Ambient Ambient::sum_rank(FieldPtr field, std::vector<Block> blocks) {
    return Ambient(std::move(field), Metric::sum_rank, std::move(blocks));
}

Ambient Ambient::with_field(FieldPtr field) const { return Ambient(std::move(field), metric_, blocks_); }

namespace {

std::size_t rank_binary(const Elem* v, std::size_t m, std::size_t n) {
    // XOR basis keyed by leading bit; rows are column bitmasks.
    std::uint64_t basis[64] = {};
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t x = 0;
        for (std::size_t j = 0; j < n; ++j) x |= std::uint64_t{v[i * n + j] & 1u} << j;
        while (x != 0) {
            const int lead = 63 - __builtin_clzll(x);
            if (basis[lead] == 0) {
                basis[lead] = x;
                ++r;
                break;
            }
            x ^= basis[lead];
        }
    }
    return r;
}

}  // namespace

std::size_t block_rank(const Field& f, const Elem* v, std::size_t m, std::size_t n) {
    if (f.q() == 2 && n <= 64) return rank_binary(v, m, n);
    std::vector<Elem> a(v, v + m * n);
    std::size_t lead = 0;
    for (std::size_t c = 0; c < n && lead < m; ++c) {
        std::size_t sel = lead;
        while (sel < m && a[sel * n + c] == 0) ++sel;
        if (sel == m) continue;
        if (sel != lead) std::swap_ranges(a.begin() + sel * n, a.begin() + sel * n + n, a.begin() + lead * n);
        const Elem piv_inv = f.inv(a[lead * n + c]);
        for (std::size_t r = lead + 1; r < m; ++r) {
            const Elem x = a[r * n + c];
            if (x == 0) continue;
            const Elem factor = f.neg(f.mul(x, piv_inv));
            f.axpy({a.data() + r * n, n}, factor, {a.data() + lead * n, n});
        }
        ++lead;
    }
    return lead;
}

std::size_t Ambient::weight(std::span<const Elem> v) const {
    if (v.size() != dim_) fail(Errc::length_mismatch, "vector length does not match the ambient dimension");
    if (metric_ == Metric::hamming) return simd::active().count_nonzero(v.data(), v.size());
    std::size_t w = 0, off = 0;
    for (const auto& b : blocks_) {
        w += block_rank(*field_, v.data() + off, b.m, b.n);
        off += b.m * b.n;
    }
    return w;
}

std::vector<std::vector<Elem>> Ambient::unit_generators() const {
    const Field& f = *field_;
    const Elem q = f.q();
    std::vector<std::vector<Elem>> out;
    std::size_t off = 0;
    for (const auto& b : blocks_) {
        if (metric_ == Metric::hamming) {
            for (Elem a = 1; a < q; ++a) {
                std::vector<Elem> v(dim_, 0);
                v[off] = a;
                out.push_back(std::move(v));
            }
        } else {
            // u v^T with u any nonzero vector of F_q^m and v normalized (first nonzero entry 1).
            std::vector<Elem> u(b.m, 0), w(b.n, 0);
            auto bump = [q](std::vector<Elem>& x) {
                for (auto& d : x) {
                    if (++d < q) return true;
                    d = 0;
                }
                return false;
            };
            while (bump(u)) {
                std::fill(w.begin(), w.end(), 0);
                while (bump(w)) {
                    const auto first = std::find_if(w.begin(), w.end(), [](Elem x) { return x != 0; });
                    if (*first != 1) continue;
                    std::vector<Elem> v(dim_, 0);
                    for (std::size_t i = 0; i < b.m; ++i)
                        for (std::size_t j = 0; j < b.n; ++j) v[off + i * b.n + j] = f.mul(u[i], w[j]);
                    out.push_back(std::move(v));
                }
            }
        }
        off += b.m * b.n;
    }
    return out;
}

std::string Ambient::describe() const {
    std::ostringstream s;
    s << metric_name(metric_);
    if (metric_ == Metric::hamming) {
        s << ' ' << dim_;
    } else {
        for (const auto& b : blocks_) s << ' ' << b.m << ' ' << b.n;
    }
    return s.str();
}

bool Ambient::same_shape(const Ambient& other) const noexcept {
    return metric_ == other.metric_ && blocks_ == other.blocks_;
}

bool Ambient::operator==(const Ambient& other) const noexcept {
    return same_shape(other) && field_->p() == other.field_->p() && field_->e() == other.field_->e();
}

}  // namespace codedist
