#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antibch/field.hpp"

namespace antibch {

/// The norm-one group U_{q+1} of GF(q^2), in the coordinate order
/// beta^0, beta^1, ..., beta^q with beta = field.norm_one_generator(q).
class UnitGroup {
public:
    UnitGroup(FieldPtr field, std::uint64_t q);

    const GaloisField& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::uint64_t q() const { return q_; }
    std::size_t size() const { return elements_.size(); }
    Elem beta() const { return elements_[1]; }
    Subfield base() const { return base_; }  // GF(q)
    Subfield quad() const { return quad_; }  // GF(q^2)

    Elem operator[](std::size_t j) const { return elements_[j]; }
    const std::vector<Elem>& elements() const { return elements_; }
    // j with beta^j = u, if u is in the group.
    std::optional<std::size_t> index_of(Elem u) const;
    bool contains(Elem u) const { return index_of(u).has_value(); }

private:
    FieldPtr field_;
    std::uint64_t q_;
    Subfield base_;
    Subfield quad_;
    std::vector<Elem> elements_;
    std::vector<std::int32_t> index_;
};

/// Ambient field GF(q^2) (q = p^k) with the deterministic modulus, plus its
/// unit group.  `extension` multiplies the ambient degree when a larger tower
/// is needed.
UnitGroup make_unit_group(std::uint64_t q, int extension = 1);

}  // namespace antibch
