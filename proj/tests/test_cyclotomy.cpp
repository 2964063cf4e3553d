#include <doctest.h>

#include <numeric>
#include <set>

#include "antibch/cyclotomy.hpp"
#include "antibch/field.hpp"

using namespace antibch;

TEST_CASE("cyclotomic cosets of 3 mod 10") {
    const CosetSystem cs(3, 10);
    const std::vector<IndexSet> expect{{0}, {1, 3, 7, 9}, {2, 4, 6, 8}, {5}};
    CHECK(cs.cosets() == expect);
    CHECK(cs.coset_index(7) == 1);
    CHECK(coset_of(-1, 3, 10) == IndexSet{1, 3, 7, 9});
}

TEST_CASE("q-cosets mod q+1 are {0}, {i, -i}, and {(q+1)/2} for odd q") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        const CosetSystem cs(q, q + 1);
        std::size_t covered = 0;
        for (const auto& c : cs.cosets()) {
            covered += c.size();
            CHECK(c.size() <= 2);
            if (c.size() == 2) CHECK((c[0] + c[1]) % static_cast<int>(q + 1) == 0);
        }
        CHECK(covered == q + 1);
        CHECK(cs.cosets().size() == (q % 2 ? (q + 3) / 2 : (q + 2) / 2));
    }
}

TEST_CASE("cosets partition Z_n and have size ord_{n/gcd(e,n)}(r)") {
    for (auto [r, n] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 15}, {3, 26}, {4, 21}, {5, 24}, {9, 82}}) {
        const CosetSystem cs(r, n);
        std::set<int> seen;
        for (const auto& c : cs.cosets()) {
            for (int e : c) CHECK(seen.insert(e).second);
            const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(c[0]), n);
            const std::uint64_t sub = n / g;
            CHECK(c.size() == (sub == 1 ? 1 : multiplicative_order_mod(r % sub, sub)));
        }
        CHECK(seen.size() == n);
    }
}

TEST_CASE("invariance and representatives") {
    CHECK(is_invariant({0, 1, 3, 7, 9}, 3, 10));
    CHECK_FALSE(is_invariant({0, 1, 3}, 3, 10));
    CHECK(representatives({1, 3, 5, 7, 9}, 3, 10) == std::vector<int>{1, 5});
    CHECK_THROWS(representatives({1}, 3, 10));
}

TEST_CASE("all invariant subsets") {
    const InvariantSets all(3, 10);
    CHECK(all.size() == 16);
    std::set<IndexSet> distinct;
    for (std::uint64_t m = 0; m < all.size(); ++m) {
        const IndexSet s = all[m];
        CHECK(is_invariant(s, 3, 10));
        distinct.insert(s);
    }
    CHECK(distinct.size() == 16);
    CHECK(all[0].empty());
    CHECK(all[15].size() == 10);
}

TEST_CASE("set helpers") {
    CHECK(complement({0, 2, 3}, 5) == IndexSet{1, 4});
    CHECK(negate({0, 1, 2}, 5) == IndexSet{0, 3, 4});
}

TEST_CASE("arithmetic helpers") {
    CHECK(prime_power(81) == std::pair<std::uint32_t, int>{3, 4});
    CHECK_THROWS(prime_power(12));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    CHECK(ipow(5, 3) == 125);
    CHECK(multiplicative_order_mod(3, 10) == 4);
    CHECK(multiplicative_order_mod(4, 5) == 2);
}
