#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "codedist/field.hpp"

namespace codedist {

enum class Metric { hamming, rank, sum_rank };

const char* metric_name(Metric m) noexcept;

/// One m x n matrix block of a rank or sum-rank ambient.
struct Block {
    std::size_t m = 1;
    std::size_t n = 1;
    bool operator==(const Block&) const = default;
};

/// The space V = F_q^N with a Hamming, rank or sum-rank weight. Matrix blocks are flattened row-major.
class Ambient {
public:
    static Ambient hamming(FieldPtr field, std::size_t n);
    static Ambient rank(FieldPtr field, std::size_t m, std::size_t n);
    static Ambient sum_rank(FieldPtr field, std::vector<Block> blocks);

    Metric metric() const noexcept { return metric_; }
    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    /// Hamming: n blocks of shape 1x1.
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    /// Largest possible weight: n, min(m, n), or the sum of min(m_h, n_h).
    std::size_t max_weight() const noexcept { return max_weight_; }
    /// Length n of a Hamming ambient.
    std::size_t length() const noexcept { return dim_; }

    std::size_t weight(std::span<const Elem> v) const;
    /// The same shape over another field (used by scalar extension).
    Ambient with_field(FieldPtr field) const;
    /// Every weight-1 vector: nonzero multiples of unit vectors, or the rank-1 matrices of one block.
    std::vector<std::vector<Elem>> unit_generators() const;

    std::string describe() const;
    bool same_shape(const Ambient& other) const noexcept;
    bool operator==(const Ambient& other) const noexcept;

private:
    Ambient(FieldPtr field, Metric metric, std::vector<Block> blocks);

    FieldPtr field_;
    Metric metric_ = Metric::hamming;
    std::vector<Block> blocks_;
    std::size_t dim_ = 0;
    std::size_t max_weight_ = 0;
};

/// Rank of an m x n row-major block.
std::size_t block_rank(const Field& f, const Elem* v, std::size_t m, std::size_t n);

}  // namespace codedist
