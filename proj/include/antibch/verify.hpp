#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "antibch/json_io.hpp"

namespace antibch {

/// Parameters shared by every verification.  q = delta^m and delta must be
/// a power of p.
struct VerifyConfig {
    std::uint32_t p = 3;
    int m = 2;
    std::uint64_t delta = 3;
    int h = 1;
    std::optional<std::size_t> w;         // weight override for design suites
    std::optional<std::uint32_t> u0;      // serial of u0 in the ambient GF(q^2)
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::size_t samples = 100;

    std::uint64_t q() const;
    // Throws std::invalid_argument on inconsistent parameters.
    void validate() const;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string id;
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(std::string name, bool pass, std::string detail = {});
};

// Suite ids accepted by run_suite.
const std::vector<std::string>& suite_ids();

/// Runs one suite.  Throws std::invalid_argument on an unknown id or bad
/// parameters and ResourceGuardError when an enumeration would be too large.
SuiteResult run_suite(const std::string& id, const VerifyConfig& cfg);

SuiteResult verify_params(const VerifyConfig& cfg);
SuiteResult verify_dual_params(const VerifyConfig& cfg);
SuiteResult verify_min_words(const VerifyConfig& cfg);
SuiteResult verify_design(const VerifyConfig& cfg);
SuiteResult verify_design_iso(const VerifyConfig& cfg);
SuiteResult verify_p_rank(const VerifyConfig& cfg);
SuiteResult verify_classification(const VerifyConfig& cfg);
SuiteResult verify_automorphism(const VerifyConfig& cfg);
SuiteResult verify_lemmas(const VerifyConfig& cfg);
// MacWilliams transform of the dual distribution against the exhaustive
// primary distribution.
SuiteResult verify_macwilliams(const VerifyConfig& cfg);

std::string to_text(const SuiteResult& r);
Json to_json(const SuiteResult& r);

}  // namespace antibch
