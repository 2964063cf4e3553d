#include "antibch/moebius.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace antibch {

Mat2 mat_mul(const GaloisField& f, const Mat2& x, const Mat2& y) {
    return Mat2{f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
                f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

Elem mat_det(const GaloisField& f, const Mat2& m) { return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c)); }

Mat2 mat_adjugate(const GaloisField& f, const Mat2& m) { return Mat2{m.d, f.neg(m.b), f.neg(m.c), m.a}; }

Mat2 mat_inverse(const GaloisField& f, const Mat2& m) {
    const Elem det = mat_det(f, m);
    if (det.v == 0) throw std::domain_error("singular 2x2 matrix");
    const Elem s = f.inv(det);
    const Mat2 adj = mat_adjugate(f, m);
    return Mat2{f.mul(s, adj.a), f.mul(s, adj.b), f.mul(s, adj.c), f.mul(s, adj.d)};
}

ProjMap::ProjMap(const GaloisField& f, Mat2 m) {
    if (mat_det(f, m).v == 0) throw std::invalid_argument("projective map with zero determinant");
    const Elem lead = m.a.v ? m.a : m.b.v ? m.b : m.c;
    const Elem s = f.inv(lead);
    m_ = Mat2{f.mul(s, m.a), f.mul(s, m.b), f.mul(s, m.c), f.mul(s, m.d)};
}

ProjPoint apply(const GaloisField& f, const Mat2& g, ProjPoint x) {
    if (x.infinite) {
        if (g.c.v == 0) return ProjPoint::at_infinity();
        return ProjPoint::finite(f.div(g.a, g.c));
    }
    const Elem den = f.add(f.mul(g.c, x.x), g.d);
    if (den.v == 0) return ProjPoint::at_infinity();
    return ProjPoint::finite(f.div(f.add(f.mul(g.a, x.x), g.b), den));
}

ProjMap compose(const GaloisField& f, const ProjMap& g1, const ProjMap& g2) {
    return ProjMap(f, mat_mul(f, g1.matrix(), g2.matrix()));
}

ProjMap inverse(const GaloisField& f, const ProjMap& g) { return ProjMap(f, mat_adjugate(f, g.matrix())); }

bool in_stabilizer(const GaloisField& f, const Mat2& g, std::uint64_t q) {
    if (mat_det(f, g).v == 0) return false;
    const auto [p, k] = prime_power(q);
    (void)p;
    const Subfield quad = f.subfield(2 * k);
    const Mat2 m = ProjMap(f, g).matrix();
    for (Elem x : {m.a, m.b, m.c, m.d})
        if (!f.is_in(x, quad)) return false;
    const auto qi = static_cast<std::int64_t>(q);
    const Elem dq = f.pow(m.d, qi), cq = f.pow(m.c, qi);
    const Elem mu = m.d.v ? f.div(m.a, dq) : f.div(m.b, cq);
    if (mu.v == 0 || f.pow(mu, qi + 1) != f.one()) return false;
    return m.a == f.mul(mu, dq) && m.b == f.mul(mu, cq);
}

Mat2 stab_element(const GaloisField& f, std::uint64_t q, Elem c, Elem d) {
    const auto qi = static_cast<std::int64_t>(q);
    if (f.pow(c, qi + 1) == f.pow(d, qi + 1)) throw std::invalid_argument("stabilizer element needs c^(q+1) != d^(q+1)");
    return Mat2{f.pow(d, qi), f.pow(c, qi), c, d};
}

std::vector<ProjPoint> projective_line(const GaloisField& f, Subfield sub) {
    std::vector<ProjPoint> pts;
    for (Elem x : f.elements(sub)) pts.push_back(ProjPoint::finite(x));
    pts.push_back(ProjPoint::at_infinity());
    return pts;
}

std::size_t projective_index(const GaloisField& f, Subfield sub, ProjPoint x) {
    const std::vector<Elem> els = f.elements(sub);
    if (x.infinite) return els.size();
    const auto it = std::lower_bound(els.begin(), els.end(), x.x);
    if (it == els.end() || *it != x.x) throw std::invalid_argument("point outside the projective line");
    return static_cast<std::size_t>(it - els.begin());
}

Mat2 bridge_matrix(Elem u0) { return Mat2{u0, Elem{1}, Elem{1}, u0}; }

namespace {

void check_u0(const UnitGroup& U, Elem u0) {
    const GaloisField& f = U.field();
    if (!U.contains(u0)) throw std::invalid_argument("u0 must lie in U_{q+1}");
    if (u0 == f.one() || u0 == f.neg(f.one())) throw std::invalid_argument("u0 must differ from 1 and -1");
}

}  // namespace

std::vector<std::size_t> bridge(const UnitGroup& U, Elem u0) {
    check_u0(U, u0);
    const GaloisField& f = U.field();
    const Mat2 g0 = bridge_matrix(u0);
    std::vector<std::size_t> out;
    std::vector<bool> hit(U.size(), false);
    for (ProjPoint x : projective_line(f, U.base())) {
        const ProjPoint y = apply(f, g0, x);
        if (y.infinite) throw std::logic_error("bridge left U_{q+1}");
        const auto j = U.index_of(y.x);
        if (!j || hit[*j]) throw std::logic_error("bridge is not a bijection onto U_{q+1}");
        hit[*j] = true;
        out.push_back(*j);
    }
    return out;
}

Elem default_u0(const UnitGroup& U) {
    const GaloisField& f = U.field();
    std::vector<Elem> els = U.elements();
    std::sort(els.begin(), els.end());
    for (Elem u : els)
        if (u != f.one() && u != f.neg(f.one())) return u;
    throw std::invalid_argument("U_{q+1} has no element other than 1 and -1");
}

ProjMap sharp_transitivity_witness(const GaloisField& f, ProjPoint a, ProjPoint b, ProjPoint c) {
    if (a == b || b == c || a == c) throw std::invalid_argument("witness needs three distinct points");
    // T sends a -> infinity, b -> 0, c -> 1; the witness is T^(-1).
    Mat2 t;
    const Elem one = f.one(), zero = f.zero();
    if (a.infinite) {
        t = Mat2{one, f.neg(b.x), zero, f.sub(c.x, b.x)};
    } else if (b.infinite) {
        t = Mat2{zero, f.sub(c.x, a.x), one, f.neg(a.x)};
    } else if (c.infinite) {
        t = Mat2{one, f.neg(b.x), one, f.neg(a.x)};
    } else {
        const Elem ca = f.sub(c.x, a.x), cb = f.sub(c.x, b.x);
        t = Mat2{ca, f.neg(f.mul(b.x, ca)), cb, f.neg(f.mul(a.x, cb))};
    }
    return ProjMap(f, mat_adjugate(f, t));
}

Permutation induced_permutation(const UnitGroup& U, const Mat2& g) {
    const GaloisField& f = U.field();
    Permutation perm(U.size());
    for (std::size_t j = 0; j < U.size(); ++j) {
        const ProjPoint y = apply(f, g, ProjPoint::finite(U[j]));
        const auto idx = y.infinite ? std::nullopt : U.index_of(y.x);
        if (!idx) throw std::invalid_argument("map does not preserve U_{q+1}");
        perm[j] = static_cast<std::uint32_t>(*idx);
    }
    return perm;
}

std::vector<Permutation> permutation_closure(std::span<const Permutation> gens, std::size_t limit) {
    if (gens.empty()) return {};
    const std::size_t n = gens.front().size();
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
    std::set<Permutation> seen{id};
    std::vector<Permutation> frontier{id}, all{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                Permutation r(n);
                for (std::size_t i = 0; i < n; ++i) r[i] = g[p[i]];
                if (seen.insert(r).second) {
                    all.push_back(r);
                    next.push_back(std::move(r));
                    if (all.size() > limit) return all;
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

StabilizerGroup::StabilizerGroup(const UnitGroup& U) {
    const GaloisField& f = U.field();
    const std::uint64_t q = U.q();
    const std::size_t target = (q + 1) * q * (q - 1);
    d0_ = f.pow(f.primitive(), static_cast<std::int64_t>((f.size() - 1) / (q * q - 1)));
    const Mat2 rot = stab_element(f, q, f.zero(), d0_);
    const Permutation rot_perm = induced_permutation(U, rot);
    const auto qi = static_cast<std::int64_t>(q);
    for (Elem t : f.elements(U.quad())) {
        if (f.pow(t, qi + 1) == f.one()) continue;
        const Mat2 m = stab_element(f, q, f.one(), t);
        const std::vector<Permutation> gens{rot_perm, induced_permutation(U, m)};
        auto closure = permutation_closure(gens, target);
        if (closure.size() != target) continue;
        t_ = t;
        gen_matrices_ = {rot, m};
        gens_ = gens;
        elements_ = std::move(closure);
        return;
    }
    throw std::logic_error("no generating pair found for the stabilizer");
}

Codeword trace_values(const UnitGroup& U, std::span<const Elem> coeffs) {
    return trace_codeword(U.field(), U.q(), coeffs);
}

Codeword monomial_action(const UnitGroup& U, std::uint64_t delta, Elem c, Elem d, std::span<const Elem> w, bool dual) {
    const GaloisField& f = U.field();
    const std::uint64_t q = U.q();
    if (w.size() != U.size()) throw std::invalid_argument("word length must be q + 1");
    const Mat2 m = stab_element(f, q, c, d);
    const std::int64_t e = static_cast<std::int64_t>((q + 1) * (delta - 1));
    Codeword out(w.size());
    for (std::size_t j = 0; j < U.size(); ++j) {
        const Elem den = f.add(f.mul(c, U[j]), d);
        const ProjPoint src = apply(f, m, ProjPoint::finite(U[j]));
        const auto idx = src.infinite ? std::nullopt : U.index_of(src.x);
        if (den.v == 0 || !idx) throw std::logic_error("stabilizer element left U_{q+1}");
        out[j] = f.mul(f.pow(den, dual ? e : -e), w[*idx]);
    }
    return out;
}

Codeword circ_action(const UnitGroup& U, std::uint64_t delta, const Mat2& A, std::span<const Elem> coeffs) {
    const GaloisField& f = U.field();
    const std::uint64_t q = U.q();
    const Mat2 m = mat_inverse(f, A);
    const std::int64_t e = static_cast<std::int64_t>((q + 1) * (delta - 1));
    Codeword out(U.size());
    for (std::size_t j = 0; j < U.size(); ++j) {
        const Elem u = U[j];
        const Elem den = f.add(f.mul(m.c, u), m.d);
        if (den.v == 0) throw std::domain_error("A o f undefined: pole on U_{q+1}");
        const Elem v = f.div(f.add(f.mul(m.a, u), m.b), den);
        Elem acc = f.zero(), vi = v;
        for (Elem ai : coeffs) {
            acc = f.add(acc, f.mul(ai, vi));
            vi = f.mul(vi, v);
        }
        out[j] = f.mul(f.pow(den, e), f.relative_trace(acc, U.quad(), U.base()));
    }
    return out;
}

}  // namespace antibch
