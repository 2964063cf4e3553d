#include "antibch/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "antibch/errors.hpp"

namespace antibch {

namespace {

unsigned resolve_threads(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return threads;
}

// base^exp, or limit + 1 when the result exceeds limit.
std::uint64_t capped_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > limit / std::max<std::uint64_t>(base, 1)) return limit + 1;
        r *= base;
    }
    return r;
}

// Runs work(chunk, counts) for chunk = 0..chunks-1 over a pool of threads
// and sums the per-thread histograms.
template <class Work>
std::vector<std::uint64_t> parallel_histogram(std::size_t chunks, std::size_t bins, unsigned threads, Work work) {
    threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(chunks, 1)));
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(bins, 0));
    auto run = [&](unsigned t) {
        for (std::size_t ch = t; ch < chunks; ch += threads) work(ch, partial[t]);
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }
    std::vector<std::uint64_t> total(bins, 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < bins; ++i) total[i] += p[i];
    return total;
}

WeightDistribution to_big(const std::vector<std::uint64_t>& h) {
    WeightDistribution out;
    out.reserve(h.size());
    for (std::uint64_t x : h) out.emplace_back(x);
    return out;
}

// Advances a colex-ordered w-subset of [0, n); false after the last one.
bool next_colex(std::vector<std::uint32_t>& c, std::size_t n) {
    const std::size_t w = c.size();
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t limit = (i + 1 < w) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<std::uint32_t>(j);
            return true;
        }
    }
    return false;
}

// Parity checks of a length-(q+1) code expanded over GF(q): for each zero s
// and coordinate j, the pair of GF(q) coordinates of gamma^(j s).
struct ExpandedChecks {
    std::size_t rows = 0;
    std::vector<std::vector<Elem>> col;  // col[j] has `rows` entries
};

ExpandedChecks expanded_checks(const CyclicCode& c, const UnitGroup& U) {
    const GaloisField& f = c.field();
    const std::size_t n = c.length();
    const std::vector<int> exps = c.check_exponents();
    Matrix h(exps.size(), n);
    for (std::size_t r = 0; r < exps.size(); ++r) {
        const Elem g = f.pow(c.gamma(), exps[r]);
        Elem x = f.one();
        for (std::size_t j = 0; j < n; ++j) {
            h(r, j) = x;
            x = f.mul(x, g);
        }
    }
    const Matrix e = expand_over_base(U, h);
    ExpandedChecks out;
    out.rows = e.rows();
    out.col.assign(n, std::vector<Elem>(e.rows()));
    for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t j = 0; j < n; ++j) out.col[j][r] = e(r, j);
    return out;
}

void require_antiprimitive_shape(const CyclicCode& c) {
    if (c.length() != c.q() + 1) throw std::invalid_argument("support scan needs a code of length q + 1");
    const auto [p, k] = prime_power(c.q());
    (void)p;
    if (c.field().degree() % (2 * k) != 0) throw std::invalid_argument("ambient field must contain GF(q^2)");
}

// Full-support solutions of the restricted system: count and first found.
struct SubsetResult {
    std::uint64_t count = 0;
    std::optional<std::vector<Elem>> first;
};

SubsetResult solve_on_support(const GaloisField& f, const ExpandedChecks& chk, std::span<const std::uint32_t> s,
                              const std::vector<Elem>& alphabet, bool want_count) {
    const std::size_t w = s.size();
    Matrix m(chk.rows, w);
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t r = 0; r < chk.rows; ++r) m(r, j) = chk.col[s[j]][r];
    const Matrix ns = nullspace(f, m);
    SubsetResult res;
    const std::size_t dim = ns.rows();
    if (dim == 0) return res;
    const std::uint64_t q = alphabet.size();
    const std::uint64_t total = capped_pow(q, dim, std::uint64_t{1} << 20);
    if (total > (std::uint64_t{1} << 20)) throw ResourceGuardError("solution space too large to enumerate");
    std::vector<std::size_t> digits(dim, 0);
    std::vector<Elem> v(w);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t d = 0; d < dim; ++d) {
            digits[d] = t % q;
            t /= q;
        }
        bool full = true;
        for (std::size_t j = 0; j < w && full; ++j) {
            Elem acc = f.zero();
            for (std::size_t d = 0; d < dim; ++d)
                if (digits[d]) acc = f.add(acc, f.mul(alphabet[digits[d]], ns(d, j)));
            v[j] = acc;
            full = acc.v != 0;
        }
        if (!full) continue;
        ++res.count;
        if (!res.first) res.first = v;
        if (!want_count) return res;
    }
    return res;
}

}  // namespace

std::size_t hamming_weight(std::span<const Elem> w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x.v != 0; }));
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

WeightDistribution weight_distribution_exhaustive(const CyclicCode& c, unsigned threads) {
    const GaloisField& f = c.field();
    const std::size_t n = c.length(), k = c.dimension();
    const std::uint64_t q = c.q();
    if (capped_pow(q, k, kExhaustiveLimit) > kExhaustiveLimit)
        throw ResourceGuardError("q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the exhaustive guard 2^26");
    if (k == 0) {
        std::vector<std::uint64_t> h(n + 1, 0);
        h[0] = 1;
        return to_big(h);
    }
    const std::vector<Elem> alpha = c.alphabet_elements();
    const Matrix g = c.generator_matrix();
    // step[r][a] = (alpha[a+1 mod q] - alpha[a]) * row r
    std::vector<std::vector<std::vector<Elem>>> step(k, std::vector<std::vector<Elem>>(q, std::vector<Elem>(n)));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t a = 0; a < q; ++a) {
            const Elem d = f.sub(alpha[(a + 1) % q], alpha[a]);
            for (std::size_t j = 0; j < n; ++j) step[r][a][j] = f.mul(d, g(r, j));
        }

    // The top row's coefficient selects the chunk; the rest run as an odometer.
    auto work = [&](std::size_t chunk, std::vector<std::uint64_t>& hist) {
        std::vector<Elem> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = f.mul(alpha[chunk], g(k - 1, j));
        std::vector<std::size_t> dig(k - 1, 0);
        while (true) {
            ++hist[hamming_weight(v)];
            std::size_t r = 0;
            for (; r + 1 < k; ++r) {
                const auto& s = step[r][dig[r]];
                for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], s[j]);
                dig[r] = (dig[r] + 1) % q;
                if (dig[r] != 0) break;
            }
            if (r + 1 >= k) break;
        }
    };
    return to_big(parallel_histogram(q, n + 1, threads, work));
}

WeightDistribution weight_distribution_trace(const UnitGroup& U, std::uint64_t delta, unsigned threads) {
    const GaloisField& f = U.field();
    const std::uint64_t q = U.q();
    const std::size_t n = U.size();
    if (delta < 2 || delta > q + 1) throw std::invalid_argument("designed distance out of range");
    const std::size_t m = delta - 1;
    if (capped_pow(q * q, m, kTraceLimit) > kTraceLimit)
        throw ResourceGuardError("(q^2)^(delta-1) exceeds the trace enumeration guard 2^28");
    const std::vector<Elem> quad = f.elements(U.quad());
    const std::size_t Q = quad.size();
    // tr[i][x][j] = Tr(quad[x] * u_j^(i+1))
    std::vector<std::vector<std::vector<Elem>>> tr(m, std::vector<std::vector<Elem>>(Q, std::vector<Elem>(n)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t x = 0; x < Q; ++x)
            for (std::size_t j = 0; j < n; ++j)
                tr[i][x][j] = f.relative_trace(f.mul(quad[x], f.pow(U[j], static_cast<std::int64_t>(i + 1))), U.quad(),
                                               U.base());

    auto work = [&](std::size_t chunk, std::vector<std::uint64_t>& hist) {
        std::vector<Elem> v = tr[m - 1][chunk];
        std::vector<std::size_t> dig(m - 1, 0);
        for (std::size_t i = 0; i + 1 < m; ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], tr[i][0][j]);
        while (true) {
            ++hist[hamming_weight(v)];
            std::size_t i = 0;
            for (; i + 1 < m; ++i) {
                const std::size_t old = dig[i], nxt = (old + 1) % Q;
                for (std::size_t j = 0; j < n; ++j) v[j] = f.add(f.sub(v[j], tr[i][old][j]), tr[i][nxt][j]);
                dig[i] = nxt;
                if (nxt != 0) break;
            }
            if (i + 1 >= m) break;
        }
    };
    return to_big(parallel_histogram(Q, n + 1, threads, work));
}

Matrix support_matrix(const GaloisField& f, std::uint64_t delta, std::span<const Elem> points) {
    const auto dm = static_cast<std::int64_t>(delta) - 1;
    Matrix m(2 * static_cast<std::size_t>(dm), points.size());
    std::size_t r = 0;
    for (std::int64_t i = -dm; i <= dm; ++i) {
        if (i == 0) continue;
        for (std::size_t j = 0; j < points.size(); ++j) m(r, j) = f.pow(points[j], i);
        ++r;
    }
    return m;
}

Matrix expand_over_base(const UnitGroup& U, const Matrix& m) {
    const GaloisField& f = U.field();
    const auto qi = static_cast<std::int64_t>(U.q());
    const Elem beta = U.beta();
    const Elem denom_inv = f.inv(f.sub(beta, f.pow(beta, qi)));
    Matrix out(2 * m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Elem y = m(r, j);
            if (!f.is_in(y, U.quad())) throw std::invalid_argument("entry outside GF(q^2)");
            const Elem x1 = f.mul(f.sub(y, f.pow(y, qi)), denom_inv);
            const Elem x0 = f.sub(y, f.mul(x1, beta));
            out(2 * r, j) = x0;
            out(2 * r + 1, j) = x1;
        }
    return out;
}

std::optional<Codeword> exists_word_of_weight(const CyclicCode& c, std::size_t w) {
    require_antiprimitive_shape(c);
    const GaloisField& f = c.field();
    const std::size_t n = c.length();
    if (w > n) return std::nullopt;
    if (w == 0) return Codeword(n, f.zero());
    if (binomial(n, w) > kSupportLimit) throw ResourceGuardError("C(n, w) exceeds the support scan guard 10^7");
    const UnitGroup U(c.field_ptr(), c.q());
    const ExpandedChecks chk = expanded_checks(c, U);
    const std::vector<Elem> alpha = c.alphabet_elements();
    std::vector<std::uint32_t> s(w);
    for (std::size_t i = 0; i < w; ++i) s[i] = static_cast<std::uint32_t>(i);
    do {
        const SubsetResult r = solve_on_support(f, chk, s, alpha, false);
        if (r.first) {
            Codeword out(n, f.zero());
            for (std::size_t j = 0; j < w; ++j) out[s[j]] = (*r.first)[j];
            if (!c.contains(out)) throw std::logic_error("support scan produced a non-codeword");
            return out;
        }
    } while (next_colex(s, n));
    return std::nullopt;
}

SupportScan scan_supports(const CyclicCode& c, std::size_t w) {
    require_antiprimitive_shape(c);
    const GaloisField& f = c.field();
    const std::size_t n = c.length();
    SupportScan out;
    if (w == 0 || w > n) return out;
    if (binomial(n, w) > kSupportLimit) throw ResourceGuardError("C(n, w) exceeds the support scan guard 10^7");
    const UnitGroup U(c.field_ptr(), c.q());
    const ExpandedChecks chk = expanded_checks(c, U);
    const std::vector<Elem> alpha = c.alphabet_elements();
    std::vector<std::uint32_t> s(w);
    for (std::size_t i = 0; i < w; ++i) s[i] = static_cast<std::uint32_t>(i);
    do {
        const SubsetResult r = solve_on_support(f, chk, s, alpha, true);
        if (r.count) {
            out.supports.push_back(s);
            out.codewords += r.count;
        }
    } while (next_colex(s, n));
    return out;
}

Codeword explicit_min_word(const UnitGroup& U, std::uint64_t delta, Elem u0) {
    const GaloisField& f = U.field();
    const std::uint64_t q = U.q();
    const auto [p, a] = prime_power(delta);
    const auto [pq, k] = prime_power(q);
    if (p != pq || k % a != 0) throw std::invalid_argument("q must be a power of delta");
    if (!U.contains(u0) || u0 == f.one() || u0 == f.neg(f.one()))
        throw std::invalid_argument("u0 must lie in U_{q+1} \\ {1, -1}");
    const std::int64_t e = static_cast<std::int64_t>((q + 1) * (delta - 1));
    const Elem u0q = f.pow(u0, static_cast<std::int64_t>(q));
    Codeword w(U.size(), f.zero());
    w[*U.index_of(f.one())] = f.one();
    for (Elem c : f.elements(f.subfield(a))) {
        const Elem den = f.add(c, u0);
        const Elem uc = f.div(f.add(c, u0q), den);
        const auto idx = U.index_of(uc);
        if (!idx || w[*idx].v != 0) throw std::logic_error("support points are not distinct points of U_{q+1}");
        w[*idx] = f.pow(den, e);
    }
    return w;
}

std::vector<Elem> min_word_moments(const UnitGroup& U, std::uint64_t delta, Elem u0) {
    const GaloisField& f = U.field();
    const Codeword w = explicit_min_word(U, delta, u0);
    std::vector<Elem> out;
    for (std::uint64_t e = 1; e < delta; ++e) {
        Elem acc = f.zero();
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j].v) acc = f.add(acc, f.mul(w[j], f.pow(U[j], static_cast<std::int64_t>(e))));
        out.push_back(acc);
    }
    return out;
}

WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, std::uint64_t q) {
    if (w.size() != n + 1) throw std::invalid_argument("weight distribution must have n + 1 entries");
    BigInt total = 0, qk = 1;
    for (const auto& x : w) {
        if (x < 0) throw std::invalid_argument("negative weight count");
        total += x;
    }
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    if (total != qk) throw std::invalid_argument("weight distribution does not sum to q^k");
    std::vector<BigInt> qm1(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) qm1[i] = qm1[i - 1] * (q - 1);
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : BigInt(0));
    }
    WeightDistribution out(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (w[i] == 0) continue;
            BigInt kr = 0;
            for (std::size_t s = 0; s <= std::min(i, j); ++s) {
                if (j - s > n - i) continue;
                BigInt term = qm1[j - s] * binom[i][s] * binom[n - i][j - s];
                if (s % 2) kr -= term;
                else kr += term;
            }
            acc += w[i] * kr;
        }
        if (acc % qk != 0) throw std::invalid_argument("MacWilliams transform is not integral");
        out[j] = acc / qk;
        if (out[j] < 0) throw std::invalid_argument("MacWilliams transform produced a negative count");
    }
    return out;
}

}  // namespace antibch
