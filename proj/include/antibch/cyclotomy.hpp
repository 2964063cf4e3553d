#pragma once

#include <cstdint>
#include <vector>

namespace antibch {

using IndexSet = std::vector<int>;  // sorted, duplicate-free subset of Z_n

/// Partition of Z_n into orbits of multiplication by r (gcd(r, n) = 1).
/// Cosets are sorted lists, ordered by their minima.
class CosetSystem {
public:
    CosetSystem(std::uint64_t r, std::uint64_t n);

    std::uint64_t r() const { return r_; }
    std::uint64_t n() const { return n_; }
    const std::vector<IndexSet>& cosets() const { return cosets_; }
    // Index into cosets() of the coset containing e.
    std::size_t coset_index(int e) const { return owner_.at(static_cast<std::size_t>(e)); }

private:
    std::uint64_t r_;
    std::uint64_t n_;
    std::vector<IndexSet> cosets_;
    std::vector<std::size_t> owner_;
};

// [e]_(r,n) = { r^i e mod n }.
IndexSet coset_of(std::int64_t e, std::uint64_t r, std::uint64_t n);

bool is_invariant(const IndexSet& e, std::uint64_t r, std::uint64_t n);

// Minima of the cosets making up an r-invariant set, ascending.  Throws if
// the set is not invariant.
std::vector<int> representatives(const IndexSet& e, std::uint64_t r, std::uint64_t n);

/// All 2^(#cosets) r-invariant subsets of Z_n, indexed by characteristic
/// vector over the minimum-sorted cosets (bit i selects cosets()[i]).
class InvariantSets {
public:
    static constexpr std::size_t kMaxCosets = 24;

    InvariantSets(std::uint64_t r, std::uint64_t n);

    std::uint64_t size() const { return std::uint64_t{1} << system_.cosets().size(); }
    IndexSet operator[](std::uint64_t mask) const;
    const CosetSystem& system() const { return system_; }

private:
    CosetSystem system_;
};

InvariantSets all_invariant_sets(std::uint64_t r, std::uint64_t n);

// Set algebra helpers on sorted index sets.
IndexSet complement(const IndexSet& s, std::uint64_t n);
IndexSet negate(const IndexSet& s, std::uint64_t n);

}  // namespace antibch
