#include "codedist/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "codedist/enumerate.hpp"
#include "codedist/errors.hpp"

namespace codedist {

FieldPtr field_of_order(std::uint64_t q) {
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) break;
        unsigned e = 0;
        std::uint64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++e;
        }
        if (r != 1) break;
        return Field::get(p, e);
    }
    fail(Errc::invalid_argument, "field order " + std::to_string(q) + " is not a prime power");
}

std::vector<Elem> all_points(const FieldPtr& field) {
    std::vector<Elem> out(field->q());
    for (Elem a = 0; a < field->q(); ++a) out[a] = a;
    return out;
}

namespace {

Elem eval_poly(const Field& f, const std::vector<Elem>& coeffs, Elem x) {
    Elem acc = 0;
    for (std::size_t t = coeffs.size(); t-- > 0;) acc = f.add(f.mul(acc, x), coeffs[t]);
    return acc;
}

void check_points(const FieldPtr& field, const std::vector<Elem>& points) {
    std::set<Elem> seen;
    for (Elem a : points) {
        if (a >= field->q()) fail(Errc::invalid_argument, "evaluation point outside the field");
        if (!seen.insert(a).second) fail(Errc::duplicate_points, "evaluation points must be distinct");
    }
    if (points.empty()) fail(Errc::invalid_argument, "no evaluation points");
}

}  // namespace

LinearCode evaluation_code(const FieldPtr& field, const std::vector<Elem>& points,
                           const std::vector<std::vector<Elem>>& polynomials) {
    check_points(field, points);
    Matrix g(field, 0, points.size());
    std::vector<Elem> row(points.size());
    for (const auto& poly : polynomials) {
        for (std::size_t j = 0; j < points.size(); ++j) row[j] = eval_poly(*field, poly, points[j]);
        g.append_row(row);
    }
    if (rank(g) != polynomials.size())
        fail(Errc::dependent_polynomials, "the polynomials are dependent as functions on the points");
    return LinearCode(Ambient::hamming(field, points.size()), g);
}

LinearCode reed_solomon(const FieldPtr& field, const std::vector<Elem>& points, std::size_t k) {
    check_points(field, points);
    if (k < 1 || k > points.size()) fail(Errc::k_too_large, "RS dimension must satisfy 1 <= k <= n");
    std::vector<std::vector<Elem>> polys;
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<Elem> c(t + 1, 0);
        c[t] = 1;
        polys.push_back(std::move(c));
    }
    return evaluation_code(field, points, polys);
}

LinearCode reed_solomon(const FieldPtr& field, std::size_t k) { return reed_solomon(field, all_points(field), k); }

LinearCode twisted_rs_f9() {
    const FieldPtr f = Field::get(3, 2);
    const Elem a = f->generator();
    std::vector<Elem> x2_minus_ax6(7, 0);
    x2_minus_ax6[2] = 1;
    x2_minus_ax6[6] = f->neg(a);
    return evaluation_code(f, all_points(f), {{1}, {0, 1}, x2_minus_ax6, {0, 0, 0, 1}});
}

LinearCode gabidulin(const FieldPtr& ext_field, const std::vector<Elem>& points, std::size_t k) {
    const FieldPtr base = Field::get(ext_field->p(), 1);
    const std::size_t m = ext_field->e(), n = points.size();
    if (!(k >= 1 && k <= n && n <= m)) fail(Errc::dimension_order, "Gabidulin codes need 1 <= k <= n <= m");
    // Independence over F_p: rank of the coordinate vectors of the points.
    Matrix coords(base, 0, m);
    std::vector<Elem> v(m);
    for (Elem a : points) {
        if (a >= ext_field->q()) fail(Errc::invalid_argument, "point outside the extension field");
        Elem x = a;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = x % ext_field->p();
            x /= ext_field->p();
        }
        coords.append_row(v);
    }
    if (rank(coords) != n) fail(Errc::dependent_points, "Gabidulin points must be linearly independent over F_q");
    Matrix g(ext_field, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem y = points[j];
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = y;
            y = ext_field->pow(y, ext_field->p());
        }
    }
    return LinearCode::from_extension(base, ext_field, g);
}

LinearCode simplex(std::uint64_t q, std::size_t k) {
    const FieldPtr f = field_of_order(q);
    if (k < 1) fail(Errc::invalid_argument, "simplex dimension must be positive");
    const CoordSpace space(f, k);
    if (space.size() > (std::uint64_t{1} << 20)) throw BudgetExceeded(space.size(), std::uint64_t{1} << 20);
    const auto pts = space.projective_points();
    Matrix g(f, k, pts.size());
    std::vector<Elem> col(k);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        space.decode(pts[j], col);
        for (std::size_t i = 0; i < k; ++i) g(i, j) = col[i];
    }
    return LinearCode(Ambient::hamming(f, pts.size()), g);
}

LinearCode even_weight(std::size_t n) {
    if (n < 2) fail(Errc::invalid_argument, "the even-weight code needs n >= 2");
    const FieldPtr f = Field::get(2, 1);
    Matrix ones(f, 1, n, std::vector<Elem>(n, 1));
    return LinearCode(Ambient::hamming(f, n), kernel(ones));
}

LinearCode hadamard_rank(std::uint64_t q, std::size_t m, std::size_t k) {
    if (!is_prime(q)) fail(Errc::invalid_argument, "rank Hadamard codes are built over prime fields");
    if (m < 1 || k < 1) fail(Errc::invalid_argument, "rank Hadamard codes need m, k >= 1");
    const FieldPtr ext = Field::get(static_cast<unsigned>(q), static_cast<unsigned>(m));
    const FieldPtr base = Field::get(static_cast<unsigned>(q), 1);
    Matrix g(ext, k, m * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t s = 0; s < m; ++s) g(i, i * m + s) = ext->pow(ext->generator(), s);
    return LinearCode::from_extension(base, ext, g);
}

namespace {

LinearCode binary_hamming(const std::vector<std::vector<Elem>>& rows) {
    const FieldPtr f = Field::get(2, 1);
    return LinearCode(Ambient::hamming(f, rows.front().size()), Matrix::from_rows(f, rows));
}

LinearCode f4_code(const std::vector<std::vector<Elem>>& rows) {
    const FieldPtr f4 = Field::get(2, 2);
    return LinearCode::from_extension(Field::get(2, 1), f4, Matrix::from_rows(f4, rows));
}

const std::map<std::string, std::function<LinearCode()>>& registry() {
    // F_4 = F_2[eta] with eta^2 = eta + 1: eta is encoded 2, eta^2 = eta + 1 is encoded 3.
    static const std::map<std::string, std::function<LinearCode()>> r = {
        {"BR17-C1",
         [] {
             const FieldPtr f = Field::get(2, 1);
             return LinearCode(Ambient::rank(f, 4, 4),
                               Matrix::from_rows(f, {{1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0},
                                                     {0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0},
                                                     {0, 0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1},
                                                     {0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1}}));
         }},
        {"gabidulin-4x4", [] { return gabidulin(Field::get(2, 4), {1, 2, 4, 8}, 1); }},
        {"duality-C1", [] { return binary_hamming({{1, 1, 1, 1, 0}, {0, 0, 0, 1, 1}}); }},
        {"duality-C2", [] { return binary_hamming({{1, 1, 1, 1, 0}, {0, 0, 1, 1, 0}}); }},
        {"ternary-422",
         [] {
             const FieldPtr f = Field::get(3, 1);
             return LinearCode(Ambient::hamming(f, 4), Matrix::from_rows(f, {{1, 1, 1, 0}, {0, 1, 2, 0}, {0, 0, 1, 1}}));
         }},
        {"F4-C1", [] { return f4_code({{1, 2, 0, 0}, {0, 1, 3, 0}}); }},
        {"F4-C2", [] { return f4_code({{1, 2, 0, 0}, {0, 0, 1, 2}}); }},
        {"nested-a-C", [] { return binary_hamming({{1, 1, 1, 0, 0}}); }},
        {"nested-a-D", [] { return binary_hamming({{1, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}}); }},
        {"nested-b-C", [] { return binary_hamming({{1, 1, 0, 0, 0}}); }},
        {"nested-b-D", [] { return binary_hamming({{1, 1, 1, 0, 0}, {0, 0, 1, 1, 1}, {1, 1, 0, 0, 0}}); }},
        {"rs-f9-4", [] { return reed_solomon(Field::get(3, 2), 4); }},
        {"twisted-rs-f9", [] { return twisted_rs_f9(); }},
    };
    return r;
}

}  // namespace

LinearCode builtin(const std::string& name) {
    const auto& r = registry();
    const auto it = r.find(name);
    if (it == r.end()) fail(Errc::unknown_name, "unknown builtin code: " + name);
    return it->second();
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

}  // namespace codedist
