#include "antibch/designs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "antibch/errors.hpp"
#include "antibch/linalg.hpp"
#include "antibch/moebius.hpp"
#include "antibch/weights.hpp"

namespace antibch {

IncidenceStructure::IncidenceStructure(std::size_t v, std::vector<Block> blocks) : v_(v) {
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        if (!b.empty() && b.back() >= v) throw std::out_of_range("block point outside [0, v)");
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    blocks_ = std::move(blocks);
}

std::optional<std::size_t> IncidenceStructure::uniform_size() const {
    if (blocks_.empty()) return std::nullopt;
    const std::size_t k = blocks_.front().size();
    for (const auto& b : blocks_)
        if (b.size() != k) return std::nullopt;
    return k;
}

std::string DesignCertificate::label() const {
    return std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
}

namespace {

IncidenceStructure support_design_by_enumeration(const CyclicCode& c, std::size_t w) {
    const GaloisField& f = c.field();
    const std::size_t n = c.length(), k = c.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > kExhaustiveLimit / c.q()) throw ResourceGuardError("q^k exceeds the exhaustive guard 2^26");
        total *= c.q();
    }
    const std::vector<Elem> alpha = c.alphabet_elements();
    const Matrix g = c.generator_matrix();
    std::set<Block> blocks;
    std::vector<Elem> v(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::fill(v.begin(), v.end(), f.zero());
        std::uint64_t t = idx;
        for (std::size_t r = 0; r < k; ++r, t /= c.q()) {
            const Elem a = alpha[t % c.q()];
            if (a.v == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(a, g(r, j)));
        }
        if (hamming_weight(v) != w) continue;
        Block b;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j].v) b.push_back(static_cast<std::uint32_t>(j));
        blocks.insert(std::move(b));
    }
    return IncidenceStructure(n, {blocks.begin(), blocks.end()});
}

// Rank of a sorted t-subset in the combinatorial number system.
std::uint64_t colex_rank(std::span<const std::uint32_t> s, const std::vector<std::vector<std::uint64_t>>& binom) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom[s[i]][i + 1];
    return r;
}

}  // namespace

IncidenceStructure support_design(const CyclicCode& c, std::size_t w) {
    const auto [p, k] = prime_power(c.q());
    (void)p;
    const bool scan_ok = c.length() == c.q() + 1 && c.field().degree() % (2 * k) == 0;
    if (w == 0 || w > c.length()) return IncidenceStructure(c.length(), {});
    if (scan_ok) return IncidenceStructure(c.length(), scan_supports(c, w).supports);
    return support_design_by_enumeration(c, w);
}

std::optional<DesignCertificate> verify_t_design(const IncidenceStructure& d, std::size_t t) {
    const auto k = d.uniform_size();
    if (!k) throw std::invalid_argument("t-design check needs blocks of one size");
    const std::size_t v = d.v();
    if (t > *k) return std::nullopt;
    std::vector<std::vector<std::uint64_t>> binom(v + 1, std::vector<std::uint64_t>(t + 1, 0));
    for (std::size_t i = 0; i <= v; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= std::min(i, t); ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
    }
    const std::uint64_t subsets = binom[v][t];
    if (subsets > kSupportLimit) throw ResourceGuardError("too many t-subsets to count");
    std::vector<std::uint64_t> count(subsets, 0);
    std::vector<std::uint32_t> pick(t);
    for (const auto& b : d.blocks()) {
        // Every t-subset of the block, as index tuples into b.
        std::vector<std::uint32_t> idx(t);
        for (std::size_t i = 0; i < t; ++i) idx[i] = static_cast<std::uint32_t>(i);
        while (true) {
            for (std::size_t i = 0; i < t; ++i) pick[i] = b[idx[i]];
            ++count[colex_rank(pick, binom)];
            std::size_t i = 0;
            for (; i < t; ++i) {
                const std::size_t limit = (i + 1 < t) ? idx[i + 1] : b.size();
                if (idx[i] + 1 < limit) {
                    ++idx[i];
                    for (std::size_t j = 0; j < i; ++j) idx[j] = static_cast<std::uint32_t>(j);
                    break;
                }
            }
            if (i == t) break;
        }
    }
    const std::uint64_t lambda = count.front();
    if (lambda == 0 || std::any_of(count.begin(), count.end(), [&](std::uint64_t x) { return x != lambda; }))
        return std::nullopt;
    return DesignCertificate{t, v, *k, lambda, lambda == 1 && t >= 2};
}

IncidenceStructure orbit_design(const UnitGroup& U, std::uint64_t delta) {
    const GaloisField& f = U.field();
    const auto [p, a] = prime_power(delta);
    const auto [pq, k] = prime_power(U.q());
    if (p != pq || k % a != 0) throw std::invalid_argument("q must be a power of delta");
    const std::vector<ProjPoint> line = projective_line(f, U.base());
    std::vector<std::int64_t> index(f.size(), -1);
    for (std::size_t i = 0; i + 1 < line.size(); ++i) index[line[i].x.v] = static_cast<std::int64_t>(i);
    const std::size_t inf = line.size() - 1;
    auto index_of = [&](ProjPoint x) { return x.infinite ? inf : static_cast<std::size_t>(index[x.x.v]); };

    std::vector<ProjPoint> base;
    for (Elem c : f.elements(f.subfield(a))) base.push_back(ProjPoint::finite(c));
    base.push_back(ProjPoint::at_infinity());

    std::set<Block> blocks;
    for (const ProjPoint& x : line)
        for (const ProjPoint& y : line)
            for (const ProjPoint& z : line) {
                if (x == y || y == z || x == z) continue;
                const ProjMap g = sharp_transitivity_witness(f, x, y, z);
                Block b;
                for (const ProjPoint& pt : base) b.push_back(static_cast<std::uint32_t>(index_of(apply(f, g, pt))));
                std::sort(b.begin(), b.end());
                blocks.insert(std::move(b));
            }
    return IncidenceStructure(line.size(), {blocks.begin(), blocks.end()});
}

boost::multiprecision::cpp_rational lambda_formula(std::uint64_t t, std::uint64_t v, std::uint64_t k,
                                                   std::uint64_t group_order, std::uint64_t stab_order) {
    if (t == 0 || v == 0 || k == 0 || group_order == 0 || stab_order == 0)
        throw std::invalid_argument("lambda formula needs positive arguments");
    using boost::multiprecision::cpp_rational;
    return cpp_rational(binomial(k, t) * group_order) / cpp_rational(binomial(v, t) * stab_order);
}

bool isomorphic_via(const IncidenceStructure& d1, const IncidenceStructure& d2, std::span<const std::size_t> bijection) {
    if (d1.v() != d2.v() || bijection.size() != d1.v()) throw std::invalid_argument("point counts differ");
    std::vector<bool> hit(d1.v(), false);
    for (std::size_t x : bijection) {
        if (x >= d1.v() || hit[x]) throw std::invalid_argument("point map is not a bijection");
        hit[x] = true;
    }
    std::vector<Block> mapped;
    mapped.reserve(d1.block_count());
    for (const auto& b : d1.blocks()) {
        Block m;
        for (std::uint32_t x : b) m.push_back(static_cast<std::uint32_t>(bijection[x]));
        mapped.push_back(std::move(m));
    }
    return IncidenceStructure(d1.v(), std::move(mapped)) == d2;
}

std::size_t p_rank(const IncidenceStructure& d, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p-rank needs a prime p");
    const FieldPtr f = GaloisField::create(p, 1);
    Matrix m(d.block_count(), d.v());
    for (std::size_t r = 0; r < d.block_count(); ++r)
        for (std::uint32_t x : d.blocks()[r]) m(r, x) = f->one();
    return rank(*f, std::move(m));
}

std::string incidence_text(const IncidenceStructure& d) {
    std::ostringstream out;
    for (const auto& b : d.blocks()) {
        std::string row(d.v(), '0');
        for (std::uint32_t x : b) row[x] = '1';
        out << row << '\n';
    }
    return out.str();
}

}  // namespace antibch
