#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "antibch/moebius.hpp"
#include "antibch/weights.hpp"

using namespace antibch;

namespace {

std::vector<ProjPoint> all_points(const GaloisField& f) {
    std::vector<ProjPoint> out{ProjPoint::at_infinity()};
    for (std::uint64_t v = 0; v < f.size(); ++v) out.push_back(ProjPoint::finite(Elem{static_cast<std::uint32_t>(v)}));
    return out;
}

// Every invertible matrix over the field, as canonical maps.
std::vector<ProjMap> all_maps(const GaloisField& f) {
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<ProjMap> out;
    const auto n = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t d = 0; d < n; ++d) {
                    const Mat2 m{Elem{a}, Elem{b}, Elem{c}, Elem{d}};
                    if (mat_det(f, m) == f.zero()) continue;
                    const ProjMap g(f, m);
                    const Mat2& k = g.matrix();
                    if (seen.insert({k.a.v, k.b.v, k.c.v, k.d.v}).second) out.push_back(g);
                }
    return out;
}

bool maps_unit_group_to_itself(const UnitGroup& U, const ProjMap& g) {
    for (Elem u : U.elements()) {
        const ProjPoint x = apply(U.field(), g, ProjPoint::finite(u));
        if (x.infinite || !U.contains(x.x)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("PGL(2,4) has 60 elements") {
    const FieldPtr f = GaloisField::create(2, 2);
    const auto maps = all_maps(*f);
    CHECK(maps.size() == 60);
    // distinct canonical forms act differently on the projective line
    std::set<std::vector<std::uint32_t>> actions;
    for (const auto& g : maps) {
        std::vector<std::uint32_t> img;
        for (const auto& x : all_points(*f)) {
            const ProjPoint y = apply(*f, g, x);
            img.push_back(y.infinite ? 99 : y.x.v);
        }
        actions.insert(img);
    }
    CHECK(actions.size() == 60);
}

TEST_CASE("singular matrices are rejected") {
    const FieldPtr f = GaloisField::create(3, 1);
    CHECK_THROWS_AS(ProjMap(*f, Mat2{Elem{1}, Elem{2}, Elem{2}, Elem{1}}), std::invalid_argument);
    CHECK_THROWS_AS(mat_inverse(*f, Mat2{Elem{1}, Elem{1}, Elem{1}, Elem{1}}), std::domain_error);
}

TEST_CASE("matrix helpers") {
    const FieldPtr f = GaloisField::create(5, 1);
    const Mat2 m{Elem{1}, Elem{2}, Elem{3}, Elem{4}};
    const Mat2 id{Elem{1}, Elem{0}, Elem{0}, Elem{1}};
    CHECK(mat_mul(*f, m, mat_inverse(*f, m)) == id);
    const Mat2 adj = mat_adjugate(*f, m);
    const Mat2 prod = mat_mul(*f, m, adj);
    CHECK(prod.b == f->zero());
    CHECK(prod.c == f->zero());
    CHECK(prod.a == mat_det(*f, m));
    CHECK(prod.d == mat_det(*f, m));
}

TEST_CASE("composition and inverse act as expected on PG(1,9)") {
    const FieldPtr f = GaloisField::create(3, 2);
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint32_t> pick(0, 8);
    auto random_map = [&] {
        while (true) {
            const Mat2 m{Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}};
            if (mat_det(*f, m) != f->zero()) return ProjMap(*f, m);
        }
    };
    for (int i = 0; i < 100; ++i) {
        const ProjMap g = random_map(), h = random_map();
        const ProjMap gh = compose(*f, g, h), gi = inverse(*f, g);
        CHECK(compose(*f, g, gi) == ProjMap::identity());
        for (const auto& x : all_points(*f)) {
            CHECK(apply(*f, gh, x) == apply(*f, g, apply(*f, h, x)));
            CHECK(apply(*f, gi, apply(*f, g, x)) == x);
        }
    }
}

TEST_CASE("sharp 3-transitivity witnesses on PG(1,4) and PG(1,5)") {
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {5, 1}}) {
        const FieldPtr f = GaloisField::create(p, d);
        const auto pts = all_points(*f);
        const ProjPoint inf = ProjPoint::at_infinity(), zero = ProjPoint::finite(f->zero()),
                        one = ProjPoint::finite(f->one());
        std::set<std::vector<std::uint32_t>> distinct;
        for (const auto& a : pts)
            for (const auto& b : pts)
                for (const auto& c : pts) {
                    if (a == b || b == c || a == c) continue;
                    const ProjMap g = sharp_transitivity_witness(*f, a, b, c);
                    CHECK(apply(*f, g, inf) == a);
                    CHECK(apply(*f, g, zero) == b);
                    CHECK(apply(*f, g, one) == c);
                    const Mat2& m = g.matrix();
                    distinct.insert({m.a.v, m.b.v, m.c.v, m.d.v});
                }
        const std::size_t n = f->size() + 1;
        CHECK(distinct.size() == n * (n - 1) * (n - 2));
        CHECK(distinct.size() == all_maps(*f).size());
        CHECK_THROWS(sharp_transitivity_witness(*f, zero, zero, one));
    }
}

TEST_CASE("stabilizer membership agrees with the action on U") {
    for (std::uint64_t q : {2, 3}) {
        const UnitGroup U = make_unit_group(q);
        const GaloisField& f = U.field();
        std::size_t count = 0;
        for (const auto& g : all_maps(f)) {
            const bool inside = maps_unit_group_to_itself(U, g);
            CHECK(in_stabilizer(f, g, q) == inside);
            count += inside;
        }
        CHECK(count == (q + 1) * q * (q - 1));
    }
}

TEST_CASE("stab_element") {
    const UnitGroup U = make_unit_group(9);
    const GaloisField& f = U.field();
    const Mat2 g = stab_element(f, 9, f.one(), f.primitive());
    CHECK(in_stabilizer(f, g, 9));
    CHECK(maps_unit_group_to_itself(U, ProjMap(f, g)));
    CHECK_THROWS_AS(stab_element(f, 9, f.one(), f.one()), std::invalid_argument);
    CHECK_THROWS_AS(stab_element(f, 9, U[3], f.one()), std::invalid_argument);
}

TEST_CASE("projective line order and the bridge") {
    for (std::uint64_t q : {3, 4, 5, 8, 9}) {
        const UnitGroup U = make_unit_group(q);
        const GaloisField& f = U.field();
        const auto line = projective_line(f, U.base());
        REQUIRE(line.size() == q + 1);
        CHECK(line.back().infinite);
        for (std::size_t i = 0; i + 2 < line.size(); ++i) CHECK(line[i].x < line[i + 1].x);
        for (std::size_t i = 0; i < line.size(); ++i) CHECK(projective_index(f, U.base(), line[i]) == i);

        const Elem u0 = default_u0(U);
        CHECK(u0 != f.one());
        CHECK(u0 != f.from_int(-1));
        CHECK(U.contains(u0));
        const auto br = bridge(U, u0);
        std::set<std::size_t> img(br.begin(), br.end());
        CHECK(img.size() == q + 1);
        for (std::size_t i = 0; i < line.size(); ++i) {
            const ProjPoint y = apply(f, bridge_matrix(u0), line[i]);
            REQUIRE_FALSE(y.infinite);
            CHECK(y.x == U[br[i]]);
        }
        CHECK_THROWS(bridge(U, f.one()));
    }
}

TEST_CASE("stabilizer group is sharply 3-transitive on U") {
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9}) {
        const UnitGroup U = make_unit_group(q);
        const StabilizerGroup G(U);
        CHECK(G.order() == (q + 1) * q * (q - 1));
        std::set<std::array<std::uint32_t, 3>> triples;
        for (const auto& perm : G.elements()) triples.insert({perm[0], perm[1], perm[2]});
        CHECK(triples.size() == G.order());
        for (const auto& m : G.generator_matrices()) CHECK(in_stabilizer(U.field(), m, q));
    }
}

TEST_CASE("permutation closure") {
    const std::vector<Permutation> cyc{{1, 2, 3, 4, 0}};
    CHECK(permutation_closure(cyc, 100).size() == 5);
    const std::vector<Permutation> sym{{1, 0, 2, 3}, {1, 2, 3, 0}};
    CHECK(permutation_closure(sym, 100).size() == 24);
}

TEST_CASE("monomial actions preserve the code and its dual") {
    for (auto [q, delta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{9, 3}, {8, 2}, {16, 4}}) {
        const CyclicCode c = antiprimitive_bch(q, delta);
        const CyclicCode d = c.dual();
        const UnitGroup U(c.field_ptr(), q);
        const GaloisField& f = U.field();
        std::mt19937 rng(static_cast<unsigned>(q));
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q * q - 1));
        const auto alpha = c.alphabet_elements();
        std::uniform_int_distribution<std::size_t> pa(0, alpha.size() - 1);
        for (int i = 0; i < 20; ++i) {
            const Elem x{pick(rng)}, y{pick(rng)};
            if (f.pow(x, static_cast<std::int64_t>(q + 1)) == f.pow(y, static_cast<std::int64_t>(q + 1))) continue;
            std::vector<Elem> msg(c.dimension());
            for (auto& e : msg) e = alpha[pa(rng)];
            CHECK(c.contains(monomial_action(U, delta, x, y, c.encode(msg), false)));
            std::vector<Elem> a(delta - 1);
            for (auto& e : a) e = Elem{pick(rng)};
            CHECK(d.contains(monomial_action(U, delta, x, y, trace_codeword(f, q, a), true)));
        }
    }
}

TEST_CASE("circ action maps trace functions into the dual") {
    const std::uint64_t q = 9, delta = 3;
    const CyclicCode c = antiprimitive_bch(q, delta);
    const CyclicCode d = c.dual();
    const UnitGroup U(c.field_ptr(), q);
    const GaloisField& f = U.field();
    const StabilizerGroup G(U);
    std::mt19937 rng(21);
    std::uniform_int_distribution<std::uint32_t> pick(0, 80);
    for (int i = 0; i < 20; ++i) {
        const std::vector<Elem> a{Elem{pick(rng)}, Elem{pick(rng)}};
        CHECK(trace_values(U, a) == trace_codeword(f, q, a));
        for (const Mat2& A : G.generator_matrices()) CHECK(d.contains(circ_action(U, delta, A, a)));
        const Mat2 id{f.one(), f.zero(), f.zero(), f.one()};
        CHECK(circ_action(U, delta, id, a) == trace_values(U, a));
    }
}
