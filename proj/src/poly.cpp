#include "antibch/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace antibch {

Poly Poly::monomial(Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, Elem{0});
    v[degree] = c;
    return Poly(std::move(v));
}

Poly poly_add(const GaloisField& f, const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly poly_sub(const GaloisField& f, const Poly& a, const Poly& b) {
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Elem> out(x.size() + y.size() - 1, f.zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].v == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(x[i], y[j]));
    }
    return Poly(std::move(out));
}

Poly poly_scale(const GaloisField& f, const Poly& a, Elem s) {
    std::vector<Elem> out = a.coeffs();
    for (auto& c : out) c = f.mul(c, s);
    return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const GaloisField& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Elem> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const Elem lead_inv = f.inv(d.back());
    std::vector<Elem> quo(rem.size() - db, f.zero());
    for (std::size_t i = rem.size(); i-- > db;) {
        const Elem coef = f.mul(rem[i], lead_inv);
        quo[i - db] = coef;
        if (coef.v == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(coef, d[j]));
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_monic(const GaloisField& f, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_gcd(const GaloisField& f, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(f, x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(f, x);
}

Poly poly_lcm(const GaloisField& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Poly g = poly_gcd(f, a, b);
    return poly_monic(f, poly_divmod(f, poly_mul(f, a, b), g).first);
}

Poly poly_reciprocal(const Poly& a) {
    std::vector<Elem> c = a.coeffs();
    std::reverse(c.begin(), c.end());
    return Poly(std::move(c));
}

Poly x_pow_minus_one(const GaloisField& f, std::size_t n) {
    std::vector<Elem> c(n + 1, f.zero());
    c[0] = f.neg(f.one());
    c[n] = f.add(c[n], f.one());
    return Poly(std::move(c));
}

Elem evaluate(const GaloisField& f, const Poly& p, Elem x) {
    Elem acc = f.zero();
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
    return acc;
}

Poly minimal_polynomial(const GaloisField& f, Elem x, Subfield sub) {
    (void)f.subfield(sub.degree);
    Poly m = Poly::constant(f.one());
    Elem y = x;
    do {
        m = poly_mul(f, m, Poly({f.neg(y), f.one()}));
        y = f.frobenius(y, sub.degree);
    } while (y != x);
    for (auto c : m.coeffs())
        if (!f.is_in(c, sub)) throw std::logic_error("minimal polynomial escaped the subfield");
    return m;
}

std::vector<Elem> interpolate_on_unit_group(const GaloisField& f, Elem gamma, std::span<const Elem> values) {
    const std::size_t n = values.size();
    if (n == 0 || f.order_of(gamma) != n)
        throw std::invalid_argument("value vector must cover the whole group generated by gamma");
    if (n % f.characteristic() == 0) throw std::invalid_argument("group order divisible by the characteristic");
    const Elem n_inv = f.inv(f.from_int(static_cast<std::int64_t>(n)));
    std::vector<Elem> a(n, f.zero());
    const Elem gamma_inv = f.inv(gamma);
    for (std::size_t i = 0; i < n; ++i) {
        // u runs over gamma^j, so u^{-i} = (gamma^{-i})^j
        const Elem step = f.pow(gamma_inv, static_cast<std::int64_t>(i));
        Elem w = f.one(), acc = f.zero();
        for (std::size_t j = 0; j < n; ++j) {
            acc = f.add(acc, f.mul(values[j], w));
            w = f.mul(w, step);
        }
        a[i] = f.mul(acc, n_inv);
    }
    return a;
}

std::vector<Elem> interpolate_on_unit_group(const GaloisField& f, Elem gamma, const std::map<Elem, Elem>& values) {
    const std::uint64_t n = f.order_of(gamma);
    std::vector<Elem> ordered;
    ordered.reserve(n);
    Elem u = f.one();
    for (std::uint64_t j = 0; j < n; ++j) {
        auto it = values.find(u);
        if (it == values.end()) throw std::invalid_argument("value map is missing a group element");
        ordered.push_back(it->second);
        u = f.mul(u, gamma);
    }
    if (values.size() != n) throw std::invalid_argument("value map has keys outside the group");
    return interpolate_on_unit_group(f, gamma, ordered);
}

Elem elementary_symmetric(const GaloisField& f, std::size_t ell, std::span<const Elem> points) {
    if (ell > points.size()) throw std::out_of_range("elementary_symmetric: ell exceeds number of points");
    // coefficients of prod(1 + u_i t), truncated at degree ell
    std::vector<Elem> e(ell + 1, f.zero());
    e[0] = f.one();
    for (Elem u : points) {
        for (std::size_t k = ell; k >= 1; --k) e[k] = f.add(e[k], f.mul(e[k - 1], u));
    }
    return e[ell];
}

Elem deleted_row_vandermonde(const GaloisField& f, std::size_t ell, std::span<const Elem> points) {
    const std::size_t n = points.size();
    if (ell > n) throw std::out_of_range("deleted_row_vandermonde: ell exceeds n");
    std::set<Elem> seen(points.begin(), points.end());
    if (seen.size() != n) throw std::invalid_argument("deleted_row_vandermonde: repeated points");
    Elem prod = f.one();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) prod = f.mul(prod, f.sub(points[i], points[j]));
    return f.mul(prod, elementary_symmetric(f, n - ell, points));
}

}  // namespace antibch
