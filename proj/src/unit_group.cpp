#include "antibch/unit_group.hpp"

#include <stdexcept>

namespace antibch {

UnitGroup::UnitGroup(FieldPtr field, std::uint64_t q) : field_(std::move(field)), q_(q) {
    const auto [p, k] = prime_power(q);
    if (p != field_->characteristic() || field_->degree() % (2 * k) != 0)
        throw std::invalid_argument("ambient field does not contain GF(q^2)");
    base_ = field_->subfield(k);
    quad_ = field_->subfield(2 * k);
    const Elem beta = field_->norm_one_generator(q);
    elements_.reserve(q + 1);
    index_.assign(field_->size(), -1);
    Elem u = field_->one();
    for (std::uint64_t j = 0; j <= q; ++j) {
        index_[u.v] = static_cast<std::int32_t>(j);
        elements_.push_back(u);
        u = field_->mul(u, beta);
    }
}

std::optional<std::size_t> UnitGroup::index_of(Elem u) const {
    if (u.v >= index_.size() || index_[u.v] < 0) return std::nullopt;
    return static_cast<std::size_t>(index_[u.v]);
}

UnitGroup make_unit_group(std::uint64_t q, int extension) {
    const auto [p, k] = prime_power(q);
    return UnitGroup(GaloisField::create(p, 2 * k * extension), q);
}

}  // namespace antibch
