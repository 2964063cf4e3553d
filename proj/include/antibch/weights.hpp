#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "antibch/cyclic_code.hpp"
#include "antibch/linalg.hpp"
#include "antibch/unit_group.hpp"

namespace antibch {

using BigInt = boost::multiprecision::cpp_int;

/// A_0..A_n: number of codewords of each Hamming weight.
using WeightDistribution = std::vector<BigInt>;

std::size_t hamming_weight(std::span<const Elem> w);

// Enumeration guards.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kTraceLimit = std::uint64_t{1} << 28;
inline constexpr std::uint64_t kSupportLimit = 10'000'000;

/// Exact distribution by running over all q^k messages.  Throws
/// ResourceGuardError when q^k exceeds kExhaustiveLimit.  threads = 0 picks
/// the hardware concurrency; the result does not depend on it.
WeightDistribution weight_distribution_exhaustive(const CyclicCode& c, unsigned threads = 1);

/// Distribution of the dual of C_(q, q+1, delta, 1) from its trace
/// parameterization a in GF(q^2)^(delta-1).  Throws ResourceGuardError when
/// (q^2)^(delta-1) exceeds kTraceLimit.
WeightDistribution weight_distribution_trace(const UnitGroup& U, std::uint64_t delta, unsigned threads = 1);

/// Rows u_j^i for i = -(delta-1)..-1, 1..delta-1 (in that order) over the
/// given points of U_{q+1}: 2(delta-1) rows and points.size() columns.
Matrix support_matrix(const GaloisField& f, std::uint64_t delta, std::span<const Elem> points);

/// Rewrites a matrix with entries in GF(q^2) as a GF(q) matrix with twice as
/// many rows, splitting y = x0 + x1 beta over the basis {1, beta}.
Matrix expand_over_base(const UnitGroup& U, const Matrix& m);

/// A codeword of weight exactly w, found by scanning w-subsets of the
/// coordinates in colex order and solving the parity-check system restricted
/// to each subset.  Only codes of length q+1 over GF(q) whose roots lie in
/// U_{q+1} are supported; for C_(q, q+1, delta, 1) the restricted system is
/// M_(delta, w).  Throws ResourceGuardError when C(n, w) > kSupportLimit.
std::optional<Codeword> exists_word_of_weight(const CyclicCode& c, std::size_t w);

/// Result of scanning every w-subset: the supports carrying a codeword of
/// full support on them, and the number of such codewords.
struct SupportScan {
    std::vector<std::vector<std::uint32_t>> supports;
    BigInt codewords;
};
SupportScan scan_supports(const CyclicCode& c, std::size_t w);

/// The weight-(delta+1) word with support {u_c : c in GF(delta)} + {1},
/// u_c = (c + u0^q)/(c + u0), values a_c = (c + u0)^((q+1)(delta-1)) and 1.
/// Throws unless u0 lies in U_{q+1} \ {1, -1}.
Codeword explicit_min_word(const UnitGroup& U, std::uint64_t delta, Elem u0);
// sum_c a_c u_c^e for e = 1..delta-1 (all zero when the word is a codeword).
std::vector<Elem> min_word_moments(const UnitGroup& U, std::uint64_t delta, Elem u0);

/// Weight distribution of the dual code by Krawtchouk sums, exact in big
/// integers.  Throws std::invalid_argument when sum(W) != q^k or the result
/// is not integral.
WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, std::uint64_t q);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace antibch
