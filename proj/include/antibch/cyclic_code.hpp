#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "antibch/cyclotomy.hpp"
#include "antibch/field.hpp"
#include "antibch/linalg.hpp"
#include "antibch/poly.hpp"

namespace antibch {

using Codeword = std::vector<Elem>;

struct BchParams {
    std::uint64_t delta = 2;
    std::int64_t h = 1;
};

/// Cyclic code of length n over the subfield GF(q) of an ambient field that
/// holds a primitive n-th root of unity gamma.  Coordinate j corresponds to
/// gamma^j.
///
/// Two index sets describe the code:
///   zeros        Z = { s : g(gamma^s) = 0 }, so c is a codeword iff
///                c(gamma^s) = 0 for every s in Z;
///   defining set E = -(Z_n \ Z), the cyclicity-defining set of the trace
///                representation, with dimension k = |E|.
class CyclicCode {
public:
    static CyclicCode from_zeros(FieldPtr field, Subfield alphabet, Elem gamma, IndexSet zeros);
    static CyclicCode from_defining_set(FieldPtr field, Subfield alphabet, Elem gamma, const IndexSet& defining_set);

    const GaloisField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    Subfield alphabet() const { return alphabet_; }
    std::uint64_t q() const { return q_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return defining_set_.size(); }
    Elem gamma() const { return gamma_; }
    const IndexSet& zeros() const { return zeros_; }
    const IndexSet& defining_set() const { return defining_set_; }
    const std::optional<BchParams>& bch_params() const { return bch_; }

    // Zeros as signed residues in (-n/2, n/2], ascending.  For the
    // antiprimitive narrow-sense BCH code these are -(delta-1)..-1, 1..delta-1.
    std::vector<int> check_exponents() const;

    const Poly& generator() const { return generator_; }
    // (x^n - 1) / g(x)
    Poly check_polynomial() const;

    // k cyclic shifts of the generator polynomial.
    Matrix generator_matrix() const;
    Codeword encode(std::span<const Elem> message) const;

    // Root test: sum_j w_j gamma^(j s) = 0 for every zero s.  Entries outside
    // GF(q) are rejected.  Throws std::invalid_argument on wrong length.
    bool contains(std::span<const Elem> w) const;

    CyclicCode dual() const;
    // Same defining set over GF(q^ell); the ambient field is enlarged (with a
    // field embedding) when it does not already contain GF(q^ell).
    CyclicCode lift(int ell) const;
    bool is_lcd() const;

    std::vector<Elem> alphabet_elements() const { return field_->elements(alphabet_); }

    bool operator==(const CyclicCode& o) const {
        return field_->same_field(*o.field_) && alphabet_ == o.alphabet_ && gamma_ == o.gamma_ &&
               generator_ == o.generator_;
    }

private:
    friend CyclicCode bch(FieldPtr, std::uint64_t, std::uint64_t, std::uint64_t, std::int64_t);
    CyclicCode() = default;

    FieldPtr field_;
    Subfield alphabet_;
    std::uint64_t q_ = 0;
    std::size_t n_ = 0;
    Elem gamma_;
    IndexSet zeros_;
    IndexSet defining_set_;
    Poly generator_;
    std::vector<Elem> gamma_pow_;
    std::optional<BchParams> bch_;
};

/// BCH code C_(q, n, delta, h): zeros are the q-cyclotomic closure of
/// h, h+1, ..., h+delta-2 and the generator is the lcm of the minimal
/// polynomials of gamma^h, ..., gamma^(h+delta-2).  The ambient field is
/// GF(q^ord_n(q)) with gamma = primitive^((|F|-1)/n).
CyclicCode bch(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::int64_t h);
// Same, inside a given ambient field.
CyclicCode bch(FieldPtr field, std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::int64_t h);

// C_(q, q+1, delta, 1) in the ambient GF(q^2); gamma is the norm-one generator.
CyclicCode antiprimitive_bch(std::uint64_t q, std::uint64_t delta);

/// Codeword of the dual of C_(q, q+1, delta, 1):
/// (Tr_{q^2/q}(sum_{i=1}^{delta-1} a_i u^i)) for u = beta^0..beta^q.
/// The field must contain GF(q^2); a has delta - 1 entries in GF(q^2).
Codeword trace_codeword(const GaloisField& f, std::uint64_t q, std::span<const Elem> a);

/// Linear code given by a generator matrix whose entries lie in GF(q).
class LinearCode {
public:
    LinearCode(FieldPtr field, Subfield alphabet, Matrix generator);

    const GaloisField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    Subfield alphabet() const { return alphabet_; }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const Matrix& generator_matrix() const { return generator_; }

    bool contains(std::span<const Elem> w) const;
    LinearCode dual() const;
    bool same_code(const LinearCode& o) const;

private:
    FieldPtr field_;
    Subfield alphabet_;
    Matrix generator_;
};

LinearCode as_linear(const CyclicCode& c);

// a . C = { (a_0 c_0, ..., a_{n-1} c_{n-1}) }.  Throws on a zero entry.
LinearCode scale(std::span<const Elem> a, const LinearCode& c);

/// Checks (a . C)^perp = a^{-1} . C^perp by row-space equality: the left side
/// from the nullspace of a . G, the right side from the cyclic dual.
bool verify_scaled_dual_identity(std::span<const Elem> a, const CyclicCode& c);

}  // namespace antibch
