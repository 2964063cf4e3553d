#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "antibch/cyclic_code.hpp"
#include "antibch/field.hpp"
#include "antibch/unit_group.hpp"

namespace antibch {

/// A point of the projective line: a field element or infinity.
struct ProjPoint {
    bool infinite = false;
    Elem x{};

    static ProjPoint at_infinity() { return {true, Elem{0}}; }
    static ProjPoint finite(Elem x) { return {false, x}; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.infinite == b.infinite && (a.infinite || a.x == b.x);
    }
};

/// 2x2 matrix [[a, b], [c, d]] over the ambient field.  Used both as a GL(2)
/// matrix and, after normalization, as a PGL(2) element.
struct Mat2 {
    Elem a, b, c, d;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_mul(const GaloisField& f, const Mat2& x, const Mat2& y);
Elem mat_det(const GaloisField& f, const Mat2& m);
// Inverse in GL(2); throws std::domain_error when singular.
Mat2 mat_inverse(const GaloisField& f, const Mat2& m);
// Adjugate [[d, -b], [-c, a]], the inverse up to a scalar.
Mat2 mat_adjugate(const GaloisField& f, const Mat2& m);

/// PGL(2) element in canonical form: the first nonzero of (a, b, c, d) is 1.
/// Equality of group elements is equality of canonical forms.
class ProjMap {
public:
    // Throws std::invalid_argument when ad - bc = 0.
    ProjMap(const GaloisField& f, Mat2 m);
    static ProjMap identity() { return ProjMap(Mat2{Elem{1}, Elem{0}, Elem{0}, Elem{1}}, 0); }

    const Mat2& matrix() const { return m_; }
    friend bool operator==(const ProjMap&, const ProjMap&) = default;

private:
    ProjMap(Mat2 m, int) : m_(m) {}
    Mat2 m_;
};

/// x -> (ax + b)/(cx + d) with -d/c -> infinity and infinity -> a/c
/// (infinity -> infinity when c = 0).
ProjPoint apply(const GaloisField& f, const Mat2& g, ProjPoint x);
inline ProjPoint apply(const GaloisField& f, const ProjMap& g, ProjPoint x) { return apply(f, g.matrix(), x); }
// g1 * g2, so that apply(compose(g1, g2), x) = apply(g1, apply(g2, x)).
ProjMap compose(const GaloisField& f, const ProjMap& g1, const ProjMap& g2);
ProjMap inverse(const GaloisField& f, const ProjMap& g);

/// Whether g is scalar-equivalent to [[d^q, c^q], [c, d]] for some c, d,
/// i.e. whether it preserves the norm-one group U_{q+1} setwise.
bool in_stabilizer(const GaloisField& f, const Mat2& g, std::uint64_t q);
inline bool in_stabilizer(const GaloisField& f, const ProjMap& g, std::uint64_t q) {
    return in_stabilizer(f, g.matrix(), q);
}
/// [[d^q, c^q], [c, d]]; throws std::invalid_argument when c^(q+1) = d^(q+1).
Mat2 stab_element(const GaloisField& f, std::uint64_t q, Elem c, Elem d);

/// Points of PG(1, q) in a fixed order: the elements of GF(q) ascending by
/// serialization, then infinity at index q.
std::vector<ProjPoint> projective_line(const GaloisField& f, Subfield sub);
std::size_t projective_index(const GaloisField& f, Subfield sub, ProjPoint x);

/// x -> (u0 x + 1)/(x + u0) from PG(1, q) onto U_{q+1}, as a table of
/// unit-group indices in projective_line order.  Throws unless u0 is in
/// U_{q+1} \ {1, -1}.
std::vector<std::size_t> bridge(const UnitGroup& U, Elem u0);
// The matrix g0 = [[u0, 1], [1, u0]] of the bridge.
Mat2 bridge_matrix(Elem u0);
// Smallest serialized element of U_{q+1} \ {1, -1}.
Elem default_u0(const UnitGroup& U);

/// The unique map sending infinity -> a, 0 -> b, 1 -> c.  Throws on repeated
/// points.
ProjMap sharp_transitivity_witness(const GaloisField& f, ProjPoint a, ProjPoint b, ProjPoint c);

/// Coordinate permutation of U_{q+1} induced by g: perm[j] = index of g(beta^j).
using Permutation = std::vector<std::uint32_t>;
Permutation induced_permutation(const UnitGroup& U, const Mat2& g);

/// The stabilizer of U_{q+1} as a permutation group on the q+1 coordinates,
/// generated by the rotation stab_element(0, d0) and stab_element(1, t).  The
/// closure is computed once and checked to have (q+1) q (q-1) elements.
class StabilizerGroup {
public:
    explicit StabilizerGroup(const UnitGroup& U);

    const std::vector<Mat2>& generator_matrices() const { return gen_matrices_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    Elem d0() const { return d0_; }
    Elem t() const { return t_; }

private:
    std::vector<Mat2> gen_matrices_;
    std::vector<Permutation> gens_;
    std::vector<Permutation> elements_;
    Elem d0_, t_;
};

// Closure of a set of permutations under composition, identity included.
std::vector<Permutation> permutation_closure(std::span<const Permutation> gens, std::size_t limit);

/// Monomial map of G_delta (dual = false) or G_delta^perp (dual = true)
/// attached to the stabilizer element with parameters (c, d):
///   out[u] = (cu + d)^(-+(q+1)(delta-1)) * w[(d^q u + c^q)/(cu + d)].
/// Throws unless c^(q+1) != d^(q+1).
Codeword monomial_action(const UnitGroup& U, std::uint64_t delta, Elem c, Elem d, std::span<const Elem> w, bool dual);

/// (A o f)(u) = (cu + d)^((q+1)(delta-1)) f((au + b)/(cu + d)) where
/// [[a, b], [c, d]] = A^(-1) in GL(2, q^2) and f(u) = Tr(sum_{i>=1} a_i u^i)
/// with coefficients a_1..a_{delta-1}.  Returns the values on U_{q+1}.
Codeword circ_action(const UnitGroup& U, std::uint64_t delta, const Mat2& A, std::span<const Elem> coeffs);
// Values of f(u) = Tr(sum_{i>=1} a_i u^i) on U_{q+1}.
Codeword trace_values(const UnitGroup& U, std::span<const Elem> coeffs);

}  // namespace antibch
