#include "antibch/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "antibch/linalg.hpp"
#include "antibch/unit_group.hpp"

namespace antibch {

bool is_perm_invariant(const CyclicCode& c, const Permutation& perm) {
    const std::size_t n = c.length();
    if (perm.size() != n) throw std::invalid_argument("permutation length does not match code length");
    const Matrix g = c.generator_matrix();
    Matrix moved(g.rows(), n);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) moved(r, perm[j]) = g(r, j);
    return rank(c.field(), stack(g, moved)) == c.dimension();
}

std::string invariant_code_name(const IndexSet& e, std::uint64_t n) {
    if (e.empty()) return "zero";
    if (e.size() == n) return "whole space";
    if (e.size() == 1 && e.front() == 0) return "repetition";
    if (e.size() == n - 1 && e.front() == 1) return "even-like";
    return "other";
}

bool ClassificationReport::theorem_holds() const {
    if (invariant_codes.size() != 4) return false;
    std::vector<std::string> names;
    for (const auto& [name, e] : invariant_codes) names.push_back(name);
    std::sort(names.begin(), names.end());
    return names == std::vector<std::string>{"even-like", "repetition", "whole space", "zero"};
}

ClassificationReport classify(std::uint32_t p, int m, int h, unsigned threads) {
    if (!is_prime(p) || m < 1 || h < 1) throw std::invalid_argument("classification needs a prime p and m, h >= 1");
    ClassificationReport rep;
    rep.p = p;
    rep.m = m;
    rep.h = h;
    rep.q = ipow(p, static_cast<unsigned>(m));
    rep.n = rep.q + 1;
    rep.r = ipow(p, static_cast<unsigned>(h));

    const InvariantSets sets(rep.r, rep.n);
    const FieldPtr field = GaloisField::create(p, std::lcm(h, 2 * m));
    const UnitGroup U(field, rep.q);
    const StabilizerGroup group(U);
    rep.generators = group.generators();

    const auto total = static_cast<std::size_t>(sets.size());
    rep.candidates.resize(total);
    rep.candidates_tested = total;
    const Subfield alphabet = field->subfield(h);

    auto work = [&](std::size_t mask) {
        ClassifiedCandidate& cand = rep.candidates[mask];
        cand.defining_set = sets[mask];
        const CyclicCode code = CyclicCode::from_defining_set(field, alphabet, U.beta(), cand.defining_set);
        cand.dimension = code.dimension();
        cand.invariant = true;
        for (std::size_t g = 0; g < rep.generators.size(); ++g)
            if (!is_perm_invariant(code, rep.generators[g])) {
                cand.invariant = false;
                cand.failing_generator = g;
                break;
            }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        for (std::size_t i = 0; i < total; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < total; i += threads) work(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& c : rep.candidates)
        if (c.invariant) rep.invariant_codes.emplace_back(invariant_code_name(c.defining_set, rep.n), c.defining_set);
    return rep;
}

}  // namespace antibch
