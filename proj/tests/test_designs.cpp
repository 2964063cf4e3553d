#include <doctest.h>

#include <map>

#include "antibch/designs.hpp"
#include "antibch/moebius.hpp"
#include "oracles.hpp"

using namespace antibch;

namespace {

// Block counts of every t-subset, by direct inclusion tests.
std::map<std::uint64_t, std::size_t> lambda_histogram(const IncidenceStructure& d, std::size_t t) {
    std::map<std::uint64_t, std::size_t> hist;
    oracle::for_each_subset(d.v(), t, [&](const std::vector<std::size_t>& s) {
        std::uint64_t count = 0;
        for (const auto& b : d.blocks()) {
            bool all = true;
            for (auto x : s) all = all && std::find(b.begin(), b.end(), x) != b.end();
            count += all;
        }
        ++hist[count];
    });
    return hist;
}

const IncidenceStructure kFano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});

}  // namespace

TEST_CASE("incidence structures are normalized") {
    const IncidenceStructure a(4, {{2, 1}, {0, 3}, {1, 2}});
    CHECK(a.block_count() == 2);
    CHECK(a.blocks().front() == Block{0, 3});
    CHECK(a.uniform_size() == std::optional<std::size_t>{2});
    CHECK_FALSE(IncidenceStructure(4, {{0}, {1, 2}}).uniform_size().has_value());
    CHECK_THROWS_AS(IncidenceStructure(3, {{0, 3}}), std::out_of_range);
}

TEST_CASE("Fano plane") {
    const auto cert = verify_t_design(kFano, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->label() == "2-(7,3,1)");
    CHECK(cert->steiner);
    CHECK_FALSE(verify_t_design(kFano, 3).has_value());
    CHECK(p_rank(kFano, 2) == 4);
    CHECK(p_rank(kFano, 3) == 6);  // det = 24
    CHECK(p_rank(kFano, 5) == 7);
    const std::string text = incidence_text(kFano);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
    CHECK(text.rfind("1110000", 0) == 0);
}

TEST_CASE("verify_t_design agrees with direct counting") {
    const IncidenceStructure broken(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}});
    CHECK_FALSE(verify_t_design(broken, 2).has_value());
    CHECK(lambda_histogram(broken, 2).size() == 2);
    CHECK(lambda_histogram(kFano, 2) == std::map<std::uint64_t, std::size_t>{{1, 21}});
}

TEST_CASE("supports of minimum words form Steiner systems") {
    for (auto [q, delta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{9, 3}, {16, 4}, {4, 2}, {8, 2}}) {
        CAPTURE(q);
        const CyclicCode c = antiprimitive_bch(q, delta);
        const IncidenceStructure d = support_design(c, delta + 1);
        const std::uint64_t expect_blocks = q * (q * q - 1) / (delta * (delta * delta - 1));
        CHECK(d.block_count() == expect_blocks);
        const auto cert = verify_t_design(d, 3);
        REQUIRE(cert.has_value());
        CHECK(cert->lambda == 1);
        CHECK(cert->k == delta + 1);
        CHECK(lambda_histogram(d, 3).size() == 1);
    }
    CHECK(verify_t_design(support_design(antiprimitive_bch(9, 3), 4), 3)->label() == "3-(10,4,1)");
}

TEST_CASE("orbit design is isomorphic to the support design through the bridge") {
    for (auto [q, delta] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{9, 3}, {16, 4}, {4, 2}, {25, 5}}) {
        CAPTURE(q);
        const CyclicCode c = antiprimitive_bch(q, delta);
        const UnitGroup U(c.field_ptr(), q);
        const IncidenceStructure orbit = orbit_design(U, delta);
        const IncidenceStructure supp = support_design(c, delta + 1);
        CHECK(orbit.block_count() == supp.block_count());
        CHECK(isomorphic_via(orbit, supp, bridge(U, default_u0(U))));
        const std::vector<std::size_t> identity = [&] {
            std::vector<std::size_t> v(q + 1);
            for (std::size_t i = 0; i <= q; ++i) v[i] = i;
            return v;
        }();
        CHECK(isomorphic_via(orbit, orbit, identity));
    }
}

TEST_CASE("isomorphic_via argument checks") {
    const std::vector<std::size_t> bad{0, 0, 1, 2, 3, 4, 5};
    CHECK_THROWS_AS(isomorphic_via(kFano, kFano, bad), std::invalid_argument);
    const std::vector<std::size_t> short_map{0, 1, 2};
    CHECK_THROWS_AS(isomorphic_via(kFano, kFano, short_map), std::invalid_argument);
}

TEST_CASE("lambda formula") {
    using boost::multiprecision::cpp_rational;
    // PGL(2,q) on the orbit of PG(1,delta): stabilizer PGL(2,delta)
    CHECK(lambda_formula(3, 10, 4, 720, 24) == cpp_rational(1));
    CHECK(lambda_formula(3, 17, 5, 4080, 60) == cpp_rational(1));
    CHECK(lambda_formula(2, 10, 4, 720, 24) == cpp_rational(4));
    CHECK(lambda_formula(3, 10, 4, 720, 48) == cpp_rational(1, 2));
}

TEST_CASE("p-ranks of small Steiner systems") {
    const UnitGroup U9 = make_unit_group(9);
    CHECK(p_rank(orbit_design(U9, 3), 3) == 10);
    const UnitGroup U4 = make_unit_group(4);
    const IncidenceStructure d4 = orbit_design(U4, 2);
    CHECK(d4.block_count() == 10);  // all 3-subsets of 5 points
    CHECK(p_rank(d4, 2) == 5);
}
