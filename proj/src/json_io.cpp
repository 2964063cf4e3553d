#include "antibch/json_io.hpp"

#include <stdexcept>

namespace antibch {

Json field_to_json(const GaloisField& f) {
    return Json{{"p", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto degree = j.at("degree").get<int>();
    auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    if (modulus.size() != static_cast<std::size_t>(degree) + 1) throw std::invalid_argument("modulus length must be degree + 1");
    return GaloisField::with_modulus(p, std::move(modulus));
}

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (Elem x : p.coeffs()) out.push_back(x.v);
    return out;
}

Poly poly_from_json(const GaloisField& f, const Json& j) {
    std::vector<Elem> c;
    for (const auto& x : j) c.push_back(f.element(x.get<std::uint64_t>()));
    return Poly(std::move(c));
}

Json code_to_json(const CyclicCode& c) {
    Json out{{"q", c.q()}, {"n", c.length()}, {"dimension", c.dimension()}, {"generator", poly_to_json(c.generator())},
             {"defining_set", c.defining_set()}};
    if (const auto& b = c.bch_params()) {
        out["delta"] = b->delta;
        out["h"] = b->h;
    } else {
        out["delta"] = nullptr;
        out["h"] = nullptr;
    }
    return out;
}

Json weights_to_json(const WeightDistribution& w) {
    Json out = Json::array();
    for (const auto& x : w) out.push_back(x.str());
    return out;
}

WeightDistribution weights_from_json(const Json& j) {
    WeightDistribution out;
    for (const auto& x : j) out.emplace_back(x.get<std::string>());
    return out;
}

Json projmap_to_json(const ProjMap& g) {
    const Mat2& m = g.matrix();
    return Json{{"a", m.a.v}, {"b", m.b.v}, {"c", m.c.v}, {"d", m.d.v}};
}

ProjMap projmap_from_json(const GaloisField& f, const Json& j) {
    auto el = [&](const char* k) { return f.element(j.at(k).get<std::uint64_t>()); };
    return ProjMap(f, Mat2{el("a"), el("b"), el("c"), el("d")});
}

Json design_to_json(const IncidenceStructure& d, const DesignCertificate& cert) {
    return Json{{"v", d.v()}, {"t", cert.t}, {"k", cert.k}, {"lambda", cert.lambda}, {"blocks", d.blocks()}};
}

IncidenceStructure design_from_json(const Json& j) {
    return IncidenceStructure(j.at("v").get<std::size_t>(), j.at("blocks").get<std::vector<Block>>());
}

Json classification_to_json(const ClassificationReport& r) {
    Json cands = Json::array();
    for (const auto& c : r.candidates) {
        Json e{{"defining_set", c.defining_set}, {"dimension", c.dimension}, {"invariant", c.invariant}};
        if (c.failing_generator) e["witness_generator"] = *c.failing_generator;
        cands.push_back(std::move(e));
    }
    Json inv = Json::array();
    for (const auto& [name, e] : r.invariant_codes) inv.push_back(Json{{"name", name}, {"defining_set", e}});
    return Json{{"p", r.p},
                {"m", r.m},
                {"h", r.h},
                {"q", r.q},
                {"n", r.n},
                {"candidates_tested", r.candidates_tested},
                {"invariant_codes", inv},
                {"generators", r.generators},
                {"candidates", cands},
                {"theorem_holds", r.theorem_holds()}};
}

}  // namespace antibch
