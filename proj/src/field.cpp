#include "codedist/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "codedist/errors.hpp"
#include "codedist/simd/kernels.hpp"

namespace codedist {

extern const char* const kConwayTableText;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>>& conway_table() {
    static const auto table = [] {
        std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> t;
        std::istringstream in(kConwayTableText);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            unsigned p = 0, e = 0;
            ls >> p >> e;
            std::vector<unsigned> c;
            unsigned x = 0;
            while (ls >> x) c.push_back(x);
            if (c.size() != e + 1 || c.back() != 1) fail(Errc::internal, "malformed Conway table row: " + line);
            t[{p, e}] = std::move(c);
        }
        return t;
    }();
    return table;
}

// Polynomials over F_p as coefficient vectors, low degree first, trimmed.
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    unsigned lead_inv = 1;
    while ((lead_inv * m.back()) % p != 1) ++lead_inv;
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const unsigned f = (a.back() * lead_inv) % p;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - f) * m[i]) % p;
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& m, unsigned p) {
    const unsigned deg = static_cast<unsigned>(m.size() - 1);
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (unsigned d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly div(d + 1);
            std::uint64_t c = code;
            for (unsigned i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<unsigned> conway_polynomial(unsigned p, unsigned e) {
    const auto& t = conway_table();
    auto it = t.find({p, e});
    return it == t.end() ? std::vector<unsigned>{} : it->second;
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned e, const FieldOptions& opts) {
    if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
    if (e == 0) fail(Errc::invalid_argument, "extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > opts.max_order)
            fail(Errc::degree_too_large, std::to_string(p) + "^" + std::to_string(e) + " exceeds field ceiling " +
                                             std::to_string(opts.max_order));
    }
    auto modulus = conway_polynomial(p, e);
    if (modulus.empty())
        fail(Errc::no_conway_polynomial, "no Conway polynomial for (" + std::to_string(p) + ", " + std::to_string(e) + ")");
    return std::make_shared<const Field>(p, e, std::move(modulus), opts);
}

std::shared_ptr<const Field> Field::get(unsigned p, unsigned e) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Field>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{p, e}];
    if (!slot) {
        try {
            slot = make(p, e, FieldOptions{});
        } catch (...) {
            cache.erase({p, e});
            throw;
        }
    }
    return slot;
}

Field::Field(unsigned p, unsigned e, std::vector<unsigned> modulus, const FieldOptions& opts)
    : p_(p), e_(e), q_(static_cast<std::uint32_t>(ipow(p, e))), modulus_(std::move(modulus)) {
    if (modulus_.size() != e_ + 1 || modulus_.back() != 1) fail(Errc::invalid_argument, "modulus must be monic of degree e");
    if (!is_irreducible(modulus_, p_)) fail(Errc::invalid_argument, "modulus is reducible over F_p");
    gen_ = e_ == 1 ? (p_ - modulus_[0]) % p_ : p_;
    if (q_ <= opts.table_limit) build_tables();
    check_generator_order();
    if (q_ <= 256 && has_tables()) {
        small_mul_.resize(std::size_t{q_} * q_);
        small_add_.resize(std::size_t{q_} * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) {
                small_mul_[a * q_ + b] = mul(a, b);
                small_add_[a * q_ + b] = add(a, b);
            }
    }
}

Elem Field::digit_add(Elem a, Elem b, bool subtract) const noexcept {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        const unsigned da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        const unsigned d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
        r += d * scale;
        scale *= p_;
    }
    return r;
}

Elem Field::poly_mul(Elem a, Elem b) const noexcept {
    // Horner over the digits of b: r = r*x + b_i * a, reducing by the monic modulus at each shift.
    std::vector<unsigned> da(e_), r(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
        da[i] = a % p_;
        a /= p_;
    }
    std::vector<unsigned> db(e_);
    for (unsigned i = 0; i < e_; ++i) {
        db[i] = b % p_;
        b /= p_;
    }
    for (unsigned step = e_; step-- > 0;) {
        // r *= x
        const unsigned top = r[e_ - 1];
        for (unsigned i = e_ - 1; i > 0; --i) r[i] = r[i - 1];
        r[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < e_; ++i) r[i] = (r[i] + (p_ - (top * modulus_[i]) % p_)) % p_;
        if (db[step] != 0)
            for (unsigned i = 0; i < e_; ++i) r[i] = (r[i] + db[step] * da[i]) % p_;
    }
    Elem out = 0;
    for (unsigned i = e_; i-- > 0;) out = out * p_ + r[i];
    return out;
}

void Field::build_tables() {
    const std::uint32_t order = q_ - 1;
    exp_.assign(2 * std::size_t{order} + 1, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        if (i > 0 && x == 1) fail(Errc::invalid_argument, "modulus root is not primitive in " + name());
        exp_[i] = x;
        log_[x] = i;
        x = e_ == 1 ? static_cast<Elem>((std::uint64_t{x} * gen_) % p_) : poly_mul(x, gen_);
    }
    for (std::uint32_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
    if (p_ != 2 && e_ > 1) {
        zech_.assign(order, -1);
        for (std::uint32_t t = 0; t < order; ++t) {
            const Elem s = digit_add(1, exp_[t], false);
            zech_[t] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
        }
    }
}

void Field::check_generator_order() const {
    if (q_ == 2) return;
    const std::uint64_t order = q_ - 1;
    if (pow(gen_, order) != 1) fail(Errc::invalid_argument, "generator order does not divide q-1 in " + name());
    for (auto r : prime_factors(order))
        if (pow(gen_, order / r) == 1) fail(Errc::invalid_argument, "modulus root is not primitive in " + name());
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
        const Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!zech_.empty()) {
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t order = q_ - 1;
        const std::uint32_t la = log_[a], lb = log_[b];
        const std::uint32_t t = lb >= la ? lb - la : lb + order - la;
        const std::int64_t z = zech_[t];
        if (z < 0) return 0;
        return exp_[la + static_cast<std::uint32_t>(z)];
    }
    return digit_add(a, b, false);
}

Elem Field::neg(Elem a) const noexcept {
    if (p_ == 2 || a == 0) return a;
    if (e_ == 1) return p_ - a;
    return digit_add(0, a, true);
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    if (e_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    return poly_mul(a, b);
}

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
    Elem r = 1;
    while (n > 0) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero in " + name());
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

std::uint32_t Field::log(Elem a) const {
    if (a == 0) fail(Errc::division_by_zero, "log of zero");
    if (log_.empty()) fail(Errc::invalid_argument, "discrete log requires tables");
    return log_[a];
}

Elem Field::exp(std::uint64_t n) const noexcept {
    if (!exp_.empty()) return exp_[n % (q_ - 1)];
    return pow(gen_, n % (q_ - 1));
}

void Field::axpy(std::span<Elem> dst, Elem c, std::span<const Elem> src) const {
    if (c == 0) return;
    if (p_ == 2 && c == 1) {
        simd::active().xor_into(dst.data(), src.data(), dst.size());
        return;
    }
    if (const Elem* mt = mul_table()) {
        simd::active().axpy_table(dst.data(), src.data(), dst.size(), mt + std::size_t{c} * q_,
                                  p_ == 2 ? nullptr : add_table(), q_);
        return;
    }
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = add(dst[i], mul(c, src[i]));
}

void Field::scale(std::span<Elem> dst, Elem c) const {
    if (c == 1) return;
    for (auto& x : dst) x = mul(c, x);
}

std::string Field::name() const {
    return "F_" + std::to_string(q_) + (e_ > 1 ? " (" + std::to_string(p_) + "^" + std::to_string(e_) + ")" : "");
}

FieldEmbedding::FieldEmbedding(FieldPtr source, FieldPtr target) : source_(std::move(source)), target_(std::move(target)) {
    if (source_->p() != target_->p() || target_->e() % source_->e() != 0)
        fail(Errc::incompatible_fields, source_->name() + " does not embed in " + target_->name());
    const std::uint64_t cofactor = (std::uint64_t{target_->q()} - 1) / (std::uint64_t{source_->q()} - 1);
    image_of_gen_ = target_->pow(target_->generator(), cofactor);
    // The image must be a root of the source modulus; Conway compatibility guarantees it.
    Elem acc = 0, power = 1;
    for (unsigned c : source_->modulus()) {
        acc = target_->add(acc, target_->mul(static_cast<Elem>(c), power));
        power = target_->mul(power, image_of_gen_);
    }
    if (acc != 0) fail(Errc::incompatible_fields, "Conway moduli are not compatible");
    powers_.resize(source_->e());
    Elem x = 1;
    for (auto& pw : powers_) {
        pw = x;
        x = target_->mul(x, source_->e() == 1 ? 1 : image_of_gen_);
    }
    if (source_->q() <= (1u << 16)) {
        map_.resize(source_->q());
        for (Elem a = 0; a < source_->q(); ++a) map_[a] = slow(a);
    }
}

Elem FieldEmbedding::slow(Elem a) const noexcept {
    const unsigned p = source_->p();
    Elem r = 0;
    for (unsigned i = 0; i < powers_.size(); ++i) {
        const Elem d = a % p;
        a /= p;
        if (d != 0) r = target_->add(r, target_->mul(d, powers_[i]));
    }
    return r;
}

Elem embed(Elem a, const FieldEmbedding& phi) { return phi(a); }

}  // namespace codedist
