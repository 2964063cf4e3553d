#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "antibch/cyclic_code.hpp"
#include "antibch/unit_group.hpp"

namespace antibch {

using Block = std::vector<std::uint32_t>;

/// Points 0..v-1 and a list of blocks.  Blocks are kept sorted and the block
/// list sorted and duplicate-free, so equal block systems compare equal.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    // Throws std::out_of_range on a point >= v.
    IncidenceStructure(std::size_t v, std::vector<Block> blocks);

    std::size_t v() const { return v_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }
    // Common block size, or nullopt when blocks differ in size or none exist.
    std::optional<std::size_t> uniform_size() const;

    friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

private:
    std::size_t v_ = 0;
    std::vector<Block> blocks_;
};

struct DesignCertificate {
    std::size_t t = 0, v = 0, k = 0;
    std::uint64_t lambda = 0;
    bool steiner = false;

    std::string label() const;  // "3-(10,4,1)"
};

/// Supports of all weight-w codewords.  Codes of length q+1 with roots in
/// U_{q+1} use the support scan; other codes fall back to full enumeration.
IncidenceStructure support_design(const CyclicCode& c, std::size_t w);

/// Certificate iff every t-subset of points lies in the same positive number
/// of blocks.  Blocks must share one size.
std::optional<DesignCertificate> verify_t_design(const IncidenceStructure& d, std::size_t t);

/// The orbit of PG(1, delta) inside PG(1, q) under PGL(2, q), on the
/// projective_line(GF(q)) point order.  PGL(2, q) is enumerated through the
/// sharp 3-transitivity witnesses of all ordered triples.
IncidenceStructure orbit_design(const UnitGroup& U, std::uint64_t delta);

/// lambda = C(k, t) |G| / (C(v, t) |Stab_B|), exact.
boost::multiprecision::cpp_rational lambda_formula(std::uint64_t t, std::uint64_t v, std::uint64_t k,
                                                   std::uint64_t group_order, std::uint64_t stab_order);

/// Whether mapping every block of d1 through the bijection gives exactly the
/// blocks of d2.  Throws std::invalid_argument on a size mismatch or when
/// the map is not a bijection of [0, v).
bool isomorphic_via(const IncidenceStructure& d1, const IncidenceStructure& d2, std::span<const std::size_t> bijection);

/// Rank over GF(p) of the blocks x points 0/1 incidence matrix.
std::size_t p_rank(const IncidenceStructure& d, std::uint32_t p);

/// Plain-text incidence matrix, one 0/1 row per block.
std::string incidence_text(const IncidenceStructure& d);

}  // namespace antibch
