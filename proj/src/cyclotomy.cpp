#include "antibch/cyclotomy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "antibch/errors.hpp"

namespace antibch {

namespace {

void check_coprime(std::uint64_t r, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    if (std::gcd(r % n, n) != 1 && n != 1) throw std::invalid_argument("gcd(r, n) != 1");
}

}  // namespace

IndexSet coset_of(std::int64_t e, std::uint64_t r, std::uint64_t n) {
    check_coprime(r, n);
    const std::int64_t sn = static_cast<std::int64_t>(n);
    const std::uint64_t start = static_cast<std::uint64_t>(((e % sn) + sn) % sn);
    IndexSet out;
    std::uint64_t x = start;
    do {
        out.push_back(static_cast<int>(x));
        x = x * (r % n) % n;
    } while (x != start);
    std::sort(out.begin(), out.end());
    return out;
}

CosetSystem::CosetSystem(std::uint64_t r, std::uint64_t n) : r_(r % n), n_(n), owner_(n, 0) {
    check_coprime(r, n);
    std::vector<bool> seen(n, false);
    for (std::uint64_t e = 0; e < n; ++e) {
        if (seen[e]) continue;
        IndexSet c = coset_of(static_cast<std::int64_t>(e), r, n);
        for (int x : c) {
            seen[static_cast<std::size_t>(x)] = true;
            owner_[static_cast<std::size_t>(x)] = cosets_.size();
        }
        cosets_.push_back(std::move(c));
    }
}

bool is_invariant(const IndexSet& e, std::uint64_t r, std::uint64_t n) {
    check_coprime(r, n);
    IndexSet image;
    image.reserve(e.size());
    for (int x : e) {
        if (x < 0 || static_cast<std::uint64_t>(x) >= n) throw std::out_of_range("element outside Z_n");
        image.push_back(static_cast<int>(static_cast<std::uint64_t>(x) * (r % n) % n));
    }
    std::sort(image.begin(), image.end());
    IndexSet sorted = e;
    std::sort(sorted.begin(), sorted.end());
    return image == sorted;
}

std::vector<int> representatives(const IndexSet& e, std::uint64_t r, std::uint64_t n) {
    if (!is_invariant(e, r, n)) throw std::invalid_argument("set is not r-invariant");
    const CosetSystem sys(r, n);
    std::vector<bool> used(sys.cosets().size(), false);
    std::vector<int> reps;
    for (int x : e) {
        const std::size_t i = sys.coset_index(x);
        if (!used[i]) {
            used[i] = true;
            reps.push_back(sys.cosets()[i].front());
        }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

InvariantSets::InvariantSets(std::uint64_t r, std::uint64_t n) : system_(r, n) {
    if (system_.cosets().size() > kMaxCosets)
        throw ResourceGuardError("too many cyclotomic cosets to enumerate: " +
                                 std::to_string(system_.cosets().size()));
}

IndexSet InvariantSets::operator[](std::uint64_t mask) const {
    if (mask >= size()) throw std::out_of_range("invariant set index out of range");
    IndexSet out;
    for (std::size_t i = 0; i < system_.cosets().size(); ++i) {
        if (mask >> i & 1) out.insert(out.end(), system_.cosets()[i].begin(), system_.cosets()[i].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

InvariantSets all_invariant_sets(std::uint64_t r, std::uint64_t n) { return InvariantSets(r, n); }

IndexSet complement(const IndexSet& s, std::uint64_t n) {
    std::vector<bool> in(n, false);
    for (int x : s) in[static_cast<std::size_t>(x)] = true;
    IndexSet out;
    for (std::uint64_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(static_cast<int>(i));
    return out;
}

IndexSet negate(const IndexSet& s, std::uint64_t n) {
    IndexSet out;
    out.reserve(s.size());
    const int sn = static_cast<int>(n);
    for (int x : s) out.push_back((sn - x % sn) % sn);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace antibch
