#include <doctest.h>

#include "antibch/json_io.hpp"

using namespace antibch;

TEST_CASE("field round trip") {
    const FieldPtr f = GaloisField::create(3, 4);
    const Json j = field_to_json(*f);
    CHECK(j.at("p") == 3);
    CHECK(j.at("degree") == 4);
    CHECK(field_from_json(j)->modulus() == f->modulus());
    Json bad = j;
    bad["degree"] = 3;
    CHECK_THROWS_AS(field_from_json(bad), std::invalid_argument);
}

TEST_CASE("polynomial round trip") {
    const FieldPtr f = GaloisField::create(3, 2);
    const Poly p({Elem{1}, Elem{0}, Elem{7}});
    CHECK(poly_to_json(p) == Json::parse("[1,0,7]"));
    CHECK(poly_from_json(*f, poly_to_json(p)) == p);
}

TEST_CASE("code descriptor") {
    const CyclicCode c = antiprimitive_bch(9, 3);
    const Json j = code_to_json(c);
    CHECK(j.at("q") == 9);
    CHECK(j.at("n") == 10);
    CHECK(j.at("dimension") == 6);
    CHECK(j.at("delta") == 3);
    CHECK(j.at("h") == 1);
    CHECK(j.at("defining_set").size() == 6);
    CHECK(poly_from_json(c.field(), j.at("generator")) == c.generator());
    const CyclicCode e = CyclicCode::from_zeros(c.field_ptr(), c.alphabet(), c.gamma(), c.zeros());
    CHECK(code_to_json(e).at("delta").is_null());
}

TEST_CASE("weights are decimal strings") {
    const WeightDistribution w{1, 0, BigInt("123456789012345678901234567890")};
    const Json j = weights_to_json(w);
    CHECK(j[2] == "123456789012345678901234567890");
    CHECK(weights_from_json(j) == w);
}

TEST_CASE("projective map round trip") {
    const FieldPtr f = GaloisField::create(5, 1);
    const ProjMap g(*f, Mat2{Elem{2}, Elem{1}, Elem{3}, Elem{3}});
    CHECK(g.matrix().a == f->one());
    CHECK(projmap_from_json(*f, projmap_to_json(g)) == g);
}

TEST_CASE("design round trip") {
    const IncidenceStructure d(5, {{0, 1, 2}, {2, 3, 4}});
    const DesignCertificate cert{1, 5, 3, 1, false};
    const Json j = design_to_json(d, cert);
    CHECK(j.at("k") == 3);
    CHECK(design_from_json(j) == d);
}

TEST_CASE("classification report") {
    const Json j = classification_to_json(classify(2, 1, 1));
    CHECK(j.at("theorem_holds") == true);
    CHECK(j.at("invariant_codes").size() == 4);
    CHECK(j.at("n") == 3);
}
