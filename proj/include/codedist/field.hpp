#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace codedist {

/// Canonical field element: sum c_i * a^i is stored as sum c_i * p^i, a the root of the modulus.
using Elem = std::uint32_t;

struct FieldOptions {
    std::uint32_t max_order = 1u << 20;
    /// log/exp/Zech tables are built only up to this order; larger fields use polynomial arithmetic.
    std::uint32_t table_limit = 1u << 16;
};

/// Bundled Conway polynomial lookup, coefficients c_0..c_e (monic). Empty when (p, e) is not tabulated.
std::vector<unsigned> conway_polynomial(unsigned p, unsigned e);

/// F_{p^e} defined by the Conway polynomial for (p, e). Immutable after construction.
class Field {
public:
    /// Shared, cached instance built with default options.
    static std::shared_ptr<const Field> get(unsigned p, unsigned e);
    /// Uncached instance; lets tests force the polynomial path by lowering table_limit.
    static std::shared_ptr<const Field> make(unsigned p, unsigned e, const FieldOptions& opts);

    unsigned p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    std::span<const unsigned> modulus() const noexcept { return modulus_; }
    /// The root of the modulus; it has multiplicative order q - 1.
    Elem generator() const noexcept { return gen_; }
    bool has_tables() const noexcept { return !log_.empty(); }
    bool is_prime_field() const noexcept { return e_ == 1; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t n) const noexcept;
    /// Discrete log base generator(); requires a != 0 and tables.
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t n) const noexcept;

    /// Dense q x q product and sum tables, present when q <= 256 (used by the vector kernels).
    const Elem* mul_table() const noexcept { return small_mul_.empty() ? nullptr : small_mul_.data(); }
    const Elem* add_table() const noexcept { return small_add_.empty() ? nullptr : small_add_.data(); }

    /// dst[i] += c * src[i]
    void axpy(std::span<Elem> dst, Elem c, std::span<const Elem> src) const;
    /// dst[i] *= c
    void scale(std::span<Elem> dst, Elem c) const;

    std::string name() const;

    Field(unsigned p, unsigned e, std::vector<unsigned> modulus, const FieldOptions& opts);

private:
    Elem poly_mul(Elem a, Elem b) const noexcept;
    Elem digit_add(Elem a, Elem b, bool subtract) const noexcept;
    void build_tables();
    void check_generator_order() const;

    unsigned p_;
    unsigned e_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    Elem gen_ = 0;
    std::vector<Elem> exp_;           // 2(q-1) entries
    std::vector<std::uint32_t> log_;  // q entries
    std::vector<std::int64_t> zech_;  // log(1 + g^t) or -1 when 1 + g^t = 0
    std::vector<Elem> small_mul_;
    std::vector<Elem> small_add_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// The Conway-compatible embedding F_{p^a} -> F_{p^b}, a | b.
class FieldEmbedding {
public:
    FieldEmbedding(FieldPtr source, FieldPtr target);

    const FieldPtr& source() const noexcept { return source_; }
    const FieldPtr& target() const noexcept { return target_; }
    Elem image_of_generator() const noexcept { return image_of_gen_; }
    Elem operator()(Elem a) const noexcept { return map_.empty() ? slow(a) : map_[a]; }

private:
    Elem slow(Elem a) const noexcept;

    FieldPtr source_;
    FieldPtr target_;
    Elem image_of_gen_ = 0;
    std::vector<Elem> powers_;  // image_of_gen^i for i < a (polynomial basis images)
    std::vector<Elem> map_;
};

Elem embed(Elem a, const FieldEmbedding& phi);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace codedist
