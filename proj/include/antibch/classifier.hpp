#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antibch/cyclic_code.hpp"
#include "antibch/cyclotomy.hpp"
#include "antibch/moebius.hpp"

namespace antibch {

/// Whether permuting coordinates by perm (w'[perm[j]] = w[j]) maps the code
/// onto itself, by rank of the stacked generator matrices.
bool is_perm_invariant(const CyclicCode& c, const Permutation& perm);

struct ClassifiedCandidate {
    IndexSet defining_set;
    std::size_t dimension = 0;
    bool invariant = false;
    // Index into the generator list of the first generator breaking invariance.
    std::optional<std::size_t> failing_generator;
};

struct ClassificationReport {
    std::uint32_t p = 0;
    int m = 0, h = 0;
    std::uint64_t q = 0, n = 0, r = 0;
    std::size_t candidates_tested = 0;
    std::vector<ClassifiedCandidate> candidates;
    // Invariant codes as (name, defining set).
    std::vector<std::pair<std::string, IndexSet>> invariant_codes;
    std::vector<Permutation> generators;

    // Exactly the four codes: zero, repetition, even-like, whole space.
    bool theorem_holds() const;
};

// "zero", "repetition", "even-like", "whole space", or "other".
std::string invariant_code_name(const IndexSet& defining_set, std::uint64_t n);

/// All cyclic codes of length p^m + 1 over GF(p^h), tested for invariance
/// under the stabilizer generators.  Throws ResourceGuardError when the
/// number of cyclotomic cosets exceeds the enumeration guard.
ClassificationReport classify(std::uint32_t p, int m, int h, unsigned threads = 1);

}  // namespace antibch
