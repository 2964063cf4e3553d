#pragma once

#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "antibch/field.hpp"

namespace antibch {

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
/// The zero polynomial has no coefficients and degree kMinusInfinity.
class Poly {
public:
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Elem c) { return Poly({c}); }
    static Poly monomial(Elem c, std::size_t degree);

    int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
    Elem leading() const { return c_.empty() ? Elem{0} : c_.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }
    std::vector<Elem> c_;
};

Poly poly_add(const GaloisField& f, const Poly& a, const Poly& b);
Poly poly_sub(const GaloisField& f, const Poly& a, const Poly& b);
Poly poly_mul(const GaloisField& f, const Poly& a, const Poly& b);
Poly poly_scale(const GaloisField& f, const Poly& a, Elem s);
// Throws std::domain_error on division by the zero polynomial.
std::pair<Poly, Poly> poly_divmod(const GaloisField& f, const Poly& a, const Poly& b);
Poly poly_monic(const GaloisField& f, const Poly& a);
Poly poly_gcd(const GaloisField& f, const Poly& a, const Poly& b);
Poly poly_lcm(const GaloisField& f, const Poly& a, const Poly& b);
// x^deg(a) * a(1/x).
Poly poly_reciprocal(const Poly& a);
// x^n - 1
Poly x_pow_minus_one(const GaloisField& f, std::size_t n);

Elem evaluate(const GaloisField& f, const Poly& p, Elem x);

/// Minimal polynomial of x over the subfield: the product of (X - y) over the
/// Frobenius orbit of x under y -> y^(p^sub.degree).
Poly minimal_polynomial(const GaloisField& f, Elem x, Subfield sub);

/// Coefficients a_0..a_{n-1} of the unique expansion f(u) = sum a_i u^i on the
/// cyclic group generated by gamma (n = values.size() = ord(gamma)), from the
/// values f(gamma^0), ..., f(gamma^(n-1)).  Computed as
/// a_i = n^{-1} sum_u f(u) u^{-i}; for n = q + 1 the factor n^{-1} is 1.
std::vector<Elem> interpolate_on_unit_group(const GaloisField& f, Elem gamma, std::span<const Elem> values);
// Same, from a map keyed by group element; throws if any element is missing.
std::vector<Elem> interpolate_on_unit_group(const GaloisField& f, Elem gamma, const std::map<Elem, Elem>& values);

// sigma_ell(points), read off prod(1 + u_i t).
Elem elementary_symmetric(const GaloisField& f, std::size_t ell, std::span<const Elem> points);

/// Closed form of the Vandermonde determinant with row `ell` deleted (rows
/// 0..n with exponent ell missing): prod_{j<i}(u_i - u_j) * sigma_{n-ell}.
/// Throws on repeated points.
Elem deleted_row_vandermonde(const GaloisField& f, std::size_t ell, std::span<const Elem> points);

}  // namespace antibch
