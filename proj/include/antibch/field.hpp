#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace antibch {

// An element of a finite field, serialized as the integer sum(coeffs[i] * p^i)
// over the polynomial basis 1, x, ..., x^(d-1).  It carries no reference to its
// field; arithmetic goes through GaloisField.
struct Elem {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

// The subfield GF(p^degree) of an ambient GF(p^d), i.e. the elements fixed by
// the degree-th power of Frobenius.
struct Subfield {
    int degree = 1;

    friend constexpr bool operator==(Subfield, Subfield) = default;
};

/// GF(p^d) as GF(p)[x] / (modulus).
///
/// Fields with at most kTableLimit elements use log/antilog and Zech tables;
/// larger ones fall back to schoolbook polynomial arithmetic.  Instances are
/// immutable after construction and safe to share between threads.
class GaloisField {
public:
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

    /// Field with the deterministic modulus: the first monic primitive
    /// polynomial of the given degree in coefficient-lex order.
    static std::shared_ptr<const GaloisField> create(std::uint32_t p, int degree, bool use_tables = true);

    /// Field with an explicit monic irreducible modulus (coefficients lowest
    /// degree first, length degree + 1).
    static std::shared_ptr<const GaloisField> with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                                          bool use_tables = true);

    /// Lowest coefficient-lex monic primitive polynomial of the given degree.
    static std::vector<std::uint32_t> smallest_primitive_modulus(std::uint32_t p, int degree);
    static bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
    static bool is_primitive(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus, bool use_tables);

    std::uint32_t characteristic() const { return p_; }
    int degree() const { return d_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t multiplicative_order() const { return size_ - 1; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }

    bool same_field(const GaloisField& other) const {
        return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
    }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    // Multiplicative generator used for the tables; the class of x when the
    // modulus is primitive.
    Elem primitive() const { return primitive_; }
    Elem element(std::uint64_t serial) const;
    // Image of an integer in the prime field.
    Elem from_int(std::int64_t k) const;
    std::vector<std::uint32_t> coeffs(Elem x) const;
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;
    // Scalar multiple by an integer (repeated addition).
    Elem times(Elem a, std::int64_t k) const { return mul(a, from_int(k)); }

    // x^(p^e); e may be any non-negative integer.
    Elem frobenius(Elem x, std::int64_t e) const;

    Subfield subfield(int degree) const;
    bool is_in(Elem x, Subfield sub) const { return frobenius(x, sub.degree) == x; }
    Elem trace(Elem x, Subfield sub) const;
    Elem norm(Elem x, Subfield sub) const;
    // Trace from the intermediate field `from` down to `to` (to | from | d).
    Elem relative_trace(Elem x, Subfield from, Subfield to) const;
    // All elements of the subfield, ascending serialization order.
    std::vector<Elem> elements(Subfield sub) const;
    std::uint64_t subfield_size(Subfield sub) const;

    std::uint64_t order_of(Elem x) const;

    /// Generator of the norm-one group U_{q+1} inside GF(q^2) (which must be a
    /// subfield of this field): primitive()^((|F|-1)/(q+1)).
    Elem norm_one_generator(std::uint64_t q) const;

private:
    Elem slow_mul(Elem a, Elem b) const;
    Elem slow_add(Elem a, Elem b) const;
    Elem slow_neg(Elem a) const;
    void build_tables(bool modulus_primitive);

    std::uint32_t p_;
    int d_;
    std::uint64_t size_;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_{};

    // exp_ has length 2N so that exp_[log a + log b] needs no reduction.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    // zech_[k] = log(1 + g^k), or kNoLog when 1 + g^k = 0.
    std::vector<std::uint32_t> zech_;
    static constexpr std::uint32_t kNoLog = 0xffffffffu;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

// Smallest k with r^k = 1 mod n (gcd(r, n) = 1 required).
std::uint64_t multiplicative_order_mod(std::uint64_t r, std::uint64_t n);

// Returns (p, k) with q = p^k, or throws if q is not a prime power.
std::pair<std::uint32_t, int> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Embedding of a subfield-sized field `from` into a larger field `to` of the
/// same characteristic: x (the class of X in `from`) is sent to the smallest
/// serialized root of from.modulus() in `to`.
class FieldEmbedding {
public:
    FieldEmbedding(FieldPtr from, FieldPtr to);

    Elem operator()(Elem x) const;
    const FieldPtr& target() const { return to_; }

private:
    FieldPtr from_;
    FieldPtr to_;
    std::vector<Elem> basis_images_;  // images of 1, x, ..., x^(d-1)
};

/// Element bound to its field.  Arithmetic between elements of different
/// fields throws std::invalid_argument.
class FieldElem {
public:
    FieldElem(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

    const FieldPtr& field() const { return field_; }
    Elem value() const { return value_; }
    std::uint32_t serial() const { return value_.v; }
    bool is_zero() const { return value_.v == 0; }

    FieldElem operator+(const FieldElem& o) const { return {field_, field_->add(value_, check(o))}; }
    FieldElem operator-(const FieldElem& o) const { return {field_, field_->sub(value_, check(o))}; }
    FieldElem operator-() const { return {field_, field_->neg(value_)}; }
    FieldElem operator*(const FieldElem& o) const { return {field_, field_->mul(value_, check(o))}; }
    FieldElem operator/(const FieldElem& o) const { return {field_, field_->div(value_, check(o))}; }
    FieldElem inv() const { return {field_, field_->inv(value_)}; }
    FieldElem pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
    FieldElem frobenius(std::int64_t e) const { return {field_, field_->frobenius(value_, e)}; }
    FieldElem trace(Subfield sub) const { return {field_, field_->trace(value_, sub)}; }

    bool operator==(const FieldElem& o) const { return value_ == check(o); }

private:
    Elem check(const FieldElem& o) const {
        if (!field_->same_field(*o.field_)) throw std::invalid_argument("field elements from different fields");
        return o.value_;
    }

    FieldPtr field_;
    Elem value_;
};

}  // namespace antibch
