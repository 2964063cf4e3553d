#include <doctest.h>

#include <random>

#include "antibch/linalg.hpp"
#include "antibch/poly.hpp"
#include "antibch/unit_group.hpp"
#include "oracles.hpp"

using namespace antibch;

namespace {

Poly random_poly(const GaloisField& f, std::mt19937& rng, int deg) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.size() - 1));
    std::vector<Elem> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = Elem{pick(rng)};
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial and trimming") {
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == Poly::kMinusInfinity);
    CHECK(Poly({Elem{1}, Elem{0}, Elem{0}}).degree() == 0);
    CHECK(Poly::monomial(Elem{2}, 3).coeffs() == std::vector<Elem>{Elem{0}, Elem{0}, Elem{0}, Elem{2}});
}

TEST_CASE("division with remainder reconstructs the dividend") {
    const FieldPtr f = GaloisField::create(3, 2);
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_poly(*f, rng, 7), b = random_poly(*f, rng, 3);
        if (b.is_zero()) continue;
        const auto [quo, rem] = poly_divmod(*f, a, b);
        CHECK(rem.degree() < b.degree());
        CHECK(poly_add(*f, poly_mul(*f, quo, b), rem) == a);
    }
    CHECK_THROWS_AS(poly_divmod(*f, Poly::constant(f->one()), Poly()), std::domain_error);
}

TEST_CASE("gcd and lcm") {
    const FieldPtr f = GaloisField::create(5, 1);
    const Poly x1({f->from_int(-1), f->one()});  // x - 1
    const Poly x2({f->from_int(-2), f->one()});
    const Poly x3({f->from_int(-3), f->one()});
    const Poly a = poly_mul(*f, x1, x2), b = poly_mul(*f, x2, x3);
    CHECK(poly_gcd(*f, a, b) == x2);
    CHECK(poly_lcm(*f, a, b) == poly_mul(*f, poly_mul(*f, x1, x2), x3));
    CHECK(poly_monic(*f, poly_scale(*f, a, f->from_int(3))) == a);
}

TEST_CASE("evaluation is a ring homomorphism") {
    const FieldPtr f = GaloisField::create(2, 4);
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Poly a = random_poly(*f, rng, 5), b = random_poly(*f, rng, 4);
        for (std::uint32_t x = 0; x < 16; ++x) {
            CHECK(evaluate(*f, poly_mul(*f, a, b), Elem{x}) == f->mul(evaluate(*f, a, Elem{x}), evaluate(*f, b, Elem{x})));
            CHECK(evaluate(*f, poly_sub(*f, a, b), Elem{x}) == f->sub(evaluate(*f, a, Elem{x}), evaluate(*f, b, Elem{x})));
        }
    }
}

TEST_CASE("x^n - 1 and reciprocal") {
    const FieldPtr f = GaloisField::create(3, 2);
    const Poly x = x_pow_minus_one(*f, 10);
    CHECK(x.degree() == 10);
    CHECK(x.coeff(0) == f->from_int(-1));
    const Poly a({Elem{1}, Elem{2}, Elem{0}, Elem{5}});
    CHECK(poly_reciprocal(a).coeffs() == std::vector<Elem>{Elem{5}, Elem{0}, Elem{2}, Elem{1}});
}

TEST_CASE("minimal polynomial has base coefficients and the orbit as roots") {
    const FieldPtr f = GaloisField::create(3, 4);
    const Subfield base = f->subfield(2);
    for (std::uint32_t v = 0; v < 81; ++v) {
        const Poly mp = minimal_polynomial(*f, Elem{v}, base);
        CHECK(mp.leading() == f->one());
        for (Elem c : mp.coeffs()) CHECK(f->is_in(c, base));
        CHECK(evaluate(*f, mp, Elem{v}) == f->zero());
        CHECK(mp.degree() == (f->is_in(Elem{v}, base) ? 1 : 2));
    }
}

TEST_CASE("interpolation on the unit group inverts evaluation") {
    const UnitGroup U = make_unit_group(9);
    const GaloisField& f = U.field();
    std::mt19937 rng(2);
    for (int i = 0; i < 20; ++i) {
        const Poly a = random_poly(f, rng, 9);
        std::vector<Elem> vals;
        for (Elem u : U.elements()) vals.push_back(evaluate(f, a, u));
        const auto coeffs = interpolate_on_unit_group(f, U.beta(), vals);
        REQUIRE(coeffs.size() == 10);
        for (std::size_t k = 0; k < 10; ++k) CHECK(coeffs[k] == a.coeff(k));
    }
    std::map<Elem, Elem> partial{{U[0], f.one()}};
    CHECK_THROWS(interpolate_on_unit_group(f, U.beta(), partial));
}

TEST_CASE("elementary symmetric functions by expansion") {
    const FieldPtr f = GaloisField::create(5, 2);
    const std::vector<Elem> pts{Elem{3}, Elem{7}, Elem{11}, Elem{20}};
    // brute force sigma_ell as a sum over ell-subsets
    for (std::size_t ell = 0; ell <= 4; ++ell) {
        Elem s = f->zero();
        oracle::for_each_subset(4, ell, [&](const std::vector<std::size_t>& idx) {
            Elem t = f->one();
            for (auto i : idx) t = f->mul(t, pts[i]);
            s = f->add(s, t);
        });
        CHECK(elementary_symmetric(*f, ell, pts) == s);
    }
}

TEST_CASE("deleted-row Vandermonde closed form matches cofactor expansion") {
    const FieldPtr f = GaloisField::create(3, 2);
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Elem> pts;
        std::vector<std::uint32_t> pool(9);
        for (std::uint32_t i = 0; i < 9; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t n = 4;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(Elem{pool[i]});
        for (std::size_t ell = 0; ell <= n; ++ell) {
            std::vector<std::vector<Elem>> m;
            for (std::size_t e = 0; e <= n; ++e) {
                if (e == ell) continue;
                std::vector<Elem> row;
                for (Elem u : pts) row.push_back(f->pow(u, static_cast<std::int64_t>(e)));
                m.push_back(row);
            }
            CHECK(deleted_row_vandermonde(*f, ell, pts) == oracle::cofactor_det(*f, m));
        }
    }
    const std::vector<Elem> rep{Elem{1}, Elem{1}};
    CHECK_THROWS(deleted_row_vandermonde(*f, 0, rep));
}

TEST_CASE("linear algebra: rank, nullspace, determinant") {
    const FieldPtr f = GaloisField::create(3, 2);
    std::mt19937 rng(4);
    std::uniform_int_distribution<std::uint32_t> pick(0, 8);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m(4, 6);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 6; ++c) m(r, c) = Elem{pick(rng)};
        const Matrix ns = nullspace(*f, m);
        CHECK(ns.rows() + rank(*f, m) == 6);
        for (std::size_t k = 0; k < ns.rows(); ++k)
            for (std::size_t r = 0; r < 4; ++r) {
                Elem s = f->zero();
                for (std::size_t c = 0; c < 6; ++c) s = f->add(s, f->mul(m(r, c), ns(k, c)));
                CHECK(s == f->zero());
            }
        Matrix sq(4, 4);
        std::vector<std::vector<Elem>> rows(4, std::vector<Elem>(4));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) rows[r][c] = sq(r, c) = Elem{pick(rng)};
        CHECK(determinant(*f, sq) == oracle::cofactor_det(*f, rows));
        CHECK((determinant(*f, sq) != f->zero()) == (rank(*f, sq) == 4));
    }
}

TEST_CASE("row spaces") {
    const FieldPtr f = GaloisField::create(2, 1);
    const Matrix a = Matrix::from_rows({{Elem{1}, Elem{1}, Elem{0}}, {Elem{0}, Elem{1}, Elem{1}}});
    const Matrix b = Matrix::from_rows({{Elem{1}, Elem{0}, Elem{1}}, {Elem{1}, Elem{1}, Elem{0}}});
    CHECK(same_row_space(*f, a, b));
    const std::vector<Elem> v{Elem{1}, Elem{0}, Elem{0}};
    CHECK_FALSE(in_row_space(*f, a, v));
    CHECK(stack(a, b).rows() == 4);
}
