#include <doctest.h>

#include <random>
#include <set>

#include "antibch/cyclic_code.hpp"
#include "antibch/unit_group.hpp"
#include "oracles.hpp"

using namespace antibch;

namespace {

std::vector<std::uint32_t> serials(const std::vector<Elem>& xs) {
    std::vector<std::uint32_t> out;
    for (Elem x : xs) out.push_back(x.v);
    return out;
}

// Zeros {+-1, ..., +-(delta-1)} mod q+1.
std::vector<int> expected_zeros(std::uint64_t q, std::uint64_t delta) {
    std::set<int> s;
    const int n = static_cast<int>(q + 1);
    for (int i = 1; i < static_cast<int>(delta); ++i) {
        s.insert(i % n);
        s.insert((n - i % n) % n);
    }
    return {s.begin(), s.end()};
}

Codeword random_word(const CyclicCode& c, std::mt19937& rng) {
    const auto alpha = c.alphabet_elements();
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    std::vector<Elem> msg(c.dimension());
    for (auto& x : msg) x = alpha[pick(rng)];
    return c.encode(msg);
}

}  // namespace

TEST_CASE("binary Hamming code as a BCH code") {
    const CyclicCode c = bch(2, 7, 3, 1);
    CHECK(c.length() == 7);
    CHECK(c.dimension() == 4);
    CHECK(c.generator().degree() == 3);
    const auto w = oracle::enumerate_weights(c.field(), c.generator_matrix(), c.alphabet_elements());
    CHECK(w == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
}

TEST_CASE("binary [15,7,5] BCH code") {
    const CyclicCode c = bch(2, 15, 5, 1);
    CHECK(c.dimension() == 7);
    const auto w = oracle::enumerate_weights(c.field(), c.generator_matrix(), c.alphabet_elements());
    std::size_t dmin = 1;
    while (w[dmin] == 0) ++dmin;
    CHECK(dmin == 5);
}

TEST_CASE("antiprimitive BCH codes against a brute-force root test") {
    for (auto [q, delta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 2}, {4, 2}, {3, 3}, {4, 4}}) {
        CAPTURE(q);
        CAPTURE(delta);
        const CyclicCode c = antiprimitive_bch(q, delta);
        const UnitGroup U(c.field_ptr(), q);
        CHECK(c.gamma() == U.beta());
        CHECK(c.zeros() == expected_zeros(q, delta));
        const oracle::NaiveField nf{c.field().characteristic(), c.field().modulus()};
        const auto brute = oracle::brute_force_cyclic_weights(nf, c.gamma().v, q + 1, expected_zeros(q, delta),
                                                              serials(c.alphabet_elements()));
        const auto enumerated = oracle::enumerate_weights(c.field(), c.generator_matrix(), c.alphabet_elements());
        CHECK(brute == enumerated);
        std::uint64_t total = 0;
        for (auto x : brute) total += x;
        CHECK(total == ipow(q, static_cast<unsigned>(c.dimension())));
    }
}

TEST_CASE("[10,6,4] over GF(9)") {
    const CyclicCode c = antiprimitive_bch(9, 3);
    CHECK(c.length() == 10);
    CHECK(c.dimension() == 6);
    CHECK(c.check_exponents() == std::vector<int>{-2, -1, 1, 2});
    CHECK(c.generator().degree() == 4);
    for (Elem x : c.generator().coeffs()) CHECK(c.field().is_in(x, c.alphabet()));
    const auto bp = c.bch_params();
    REQUIRE(bp.has_value());
    CHECK(bp->delta == 3);
    CHECK(bp->h == 1);
    // generator times check polynomial is x^n - 1
    CHECK(poly_mul(c.field(), c.generator(), c.check_polynomial()) == x_pow_minus_one(c.field(), 10));
}

TEST_CASE("encode, contains, and cyclic shifts") {
    const CyclicCode c = antiprimitive_bch(9, 3);
    std::mt19937 rng(8);
    for (int i = 0; i < 50; ++i) {
        Codeword w = random_word(c, rng);
        CHECK(c.contains(w));
        std::rotate(w.begin(), w.begin() + 1, w.end());
        CHECK(c.contains(w));
    }
    Codeword e(10, c.field().zero());
    e[3] = c.field().one();
    CHECK_FALSE(c.contains(e));
    CHECK_THROWS_AS(c.contains(std::vector<Elem>(9)), std::invalid_argument);
    Codeword outside(10, c.field().zero());
    outside[0] = c.field().primitive();  // not in GF(9)
    CHECK_FALSE(c.contains(outside));
}

TEST_CASE("dual code is orthogonal and has complementary dimension") {
    for (auto [q, delta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{4, 2}, {9, 3}, {8, 2}, {16, 4}}) {
        const CyclicCode c = antiprimitive_bch(q, delta);
        const CyclicCode d = c.dual();
        CHECK(c.dimension() + d.dimension() == c.length());
        const Matrix gc = c.generator_matrix(), gd = d.generator_matrix();
        for (std::size_t i = 0; i < gc.rows(); ++i)
            for (std::size_t j = 0; j < gd.rows(); ++j) {
                Elem s = c.field().zero();
                for (std::size_t t = 0; t < c.length(); ++t) s = c.field().add(s, c.field().mul(gc(i, t), gd(j, t)));
                REQUIRE(s == c.field().zero());
            }
        CHECK(d.dual() == c);
        CHECK(as_linear(c).dual().same_code(as_linear(d)));
    }
}

TEST_CASE("trace codewords lie in the dual") {
    for (auto [q, delta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{9, 3}, {16, 4}, {8, 2}}) {
        const CyclicCode c = antiprimitive_bch(q, delta);
        const CyclicCode d = c.dual();
        std::mt19937 rng(static_cast<unsigned>(q));
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q * q - 1));
        for (int i = 0; i < 30; ++i) {
            std::vector<Elem> a(delta - 1);
            for (auto& x : a) x = Elem{pick(rng)};
            CHECK(d.contains(trace_codeword(c.field(), q, a)));
        }
    }
}

TEST_CASE("antiprimitive BCH codes are LCD, by brute-force hull") {
    const CyclicCode c = antiprimitive_bch(4, 2);
    CHECK(c.is_lcd());
    const GaloisField& f = c.field();
    const auto alpha = c.alphabet_elements();
    const Matrix g = c.generator_matrix();
    std::size_t hull = 0;
    std::vector<std::size_t> digit(g.rows(), 0);
    while (true) {
        Codeword w(c.length(), f.zero());
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < c.length(); ++j) w[j] = f.add(w[j], f.mul(alpha[digit[i]], g(i, j)));
        bool orth = true;
        for (std::size_t i = 0; i < g.rows() && orth; ++i) {
            Elem s = f.zero();
            for (std::size_t j = 0; j < c.length(); ++j) s = f.add(s, f.mul(w[j], g(i, j)));
            orth = s == f.zero();
        }
        hull += orth;
        std::size_t i = 0;
        while (i < digit.size() && ++digit[i] == alpha.size()) digit[i++] = 0;
        if (i == digit.size()) break;
    }
    CHECK(hull == 1);
}

TEST_CASE("the binary Hamming code is not LCD") {
    const CyclicCode c = bch(2, 7, 3, 1);
    CHECK_FALSE(c.is_lcd());
    const Matrix gd = c.dual().generator_matrix();
    for (std::size_t i = 0; i < gd.rows(); ++i) CHECK(c.contains(gd.row_vector(i)));
}

TEST_CASE("from_defining_set and from_zeros agree") {
    const CyclicCode c = antiprimitive_bch(9, 3);
    const CyclicCode e = CyclicCode::from_defining_set(c.field_ptr(), c.alphabet(), c.gamma(), c.defining_set());
    CHECK(e == c);
    CHECK(c.defining_set() == negate(complement(c.zeros(), 10), 10));
    CHECK_THROWS_AS(CyclicCode::from_zeros(c.field_ptr(), c.alphabet(), c.gamma(), IndexSet{1}), std::invalid_argument);
    CHECK_THROWS_AS(CyclicCode::from_zeros(c.field_ptr(), c.alphabet(), c.gamma(), IndexSet{11}), std::invalid_argument);
}

TEST_CASE("lift keeps the defining set and contains the base code") {
    const CyclicCode c = antiprimitive_bch(4, 2);
    for (int ell : {1, 2, 3}) {
        const CyclicCode l = c.lift(ell);
        CHECK(l.q() == ipow(4, static_cast<unsigned>(ell)));
        CHECK(l.defining_set() == c.defining_set());
        CHECK(l.dimension() == c.dimension());
        CHECK(l.length() == c.length());
        if (ell == 2) {
            // same ambient field: base codewords stay codewords
            std::mt19937 rng(1);
            for (int i = 0; i < 10; ++i) CHECK(l.contains(random_word(c, rng)));
        }
    }
}

TEST_CASE("scaled dual identity") {
    const CyclicCode c = antiprimitive_bch(9, 3);
    const auto alpha = c.alphabet_elements();
    std::mt19937 rng(6);
    std::uniform_int_distribution<std::size_t> pick(1, alpha.size() - 1);
    for (int i = 0; i < 10; ++i) {
        std::vector<Elem> a(10);
        for (auto& x : a) x = alpha[pick(rng)];
        CHECK(verify_scaled_dual_identity(a, c));
    }
    std::vector<Elem> zero(10, c.field().one());
    zero[2] = c.field().zero();
    CHECK_THROWS(scale(zero, as_linear(c)));
}

TEST_CASE("bch rejects bad parameters") {
    CHECK_THROWS(bch(6, 7, 3, 1));
    CHECK_THROWS(bch(2, 8, 3, 1));
    CHECK_THROWS(antiprimitive_bch(9, 0));
}
