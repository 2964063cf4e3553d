#include "antibch/cyclic_code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace antibch {

namespace {

std::uint64_t alphabet_size(const GaloisField& f, Subfield s) { return f.subfield_size(s); }

Elem root_of_unity(const GaloisField& f, std::uint64_t n) {
    if ((f.size() - 1) % n != 0)
        throw std::invalid_argument("field has no primitive " + std::to_string(n) + "-th root of unity");
    return f.pow(f.primitive(), static_cast<std::int64_t>((f.size() - 1) / n));
}

}  // namespace

CyclicCode CyclicCode::from_zeros(FieldPtr field, Subfield alphabet, Elem gamma, IndexSet zeros) {
    CyclicCode c;
    const GaloisField& f = *field;
    (void)f.subfield(alphabet.degree);
    c.field_ = std::move(field);
    c.alphabet_ = alphabet;
    c.q_ = alphabet_size(f, alphabet);
    c.n_ = f.order_of(gamma);
    c.gamma_ = gamma;
    if (std::gcd(c.q_, static_cast<std::uint64_t>(c.n_)) != 1) throw std::invalid_argument("gcd(n, q) != 1");
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
    for (int s : zeros)
        if (s < 0 || static_cast<std::size_t>(s) >= c.n_) throw std::invalid_argument("zero outside Z_n");
    if (!is_invariant(zeros, c.q_, c.n_)) throw std::invalid_argument("zero set is not q-invariant");
    c.zeros_ = std::move(zeros);
    c.defining_set_ = negate(complement(c.zeros_, c.n_), c.n_);

    c.gamma_pow_.resize(c.n_);
    Elem g = f.one();
    for (std::size_t k = 0; k < c.n_; ++k) {
        c.gamma_pow_[k] = g;
        g = f.mul(g, gamma);
    }
    Poly gen = Poly::constant(f.one());
    for (int s : c.zeros_) gen = poly_mul(f, gen, Poly({f.neg(c.gamma_pow_[static_cast<std::size_t>(s)]), f.one()}));
    for (Elem x : gen.coeffs())
        if (!f.is_in(x, alphabet)) throw std::logic_error("generator polynomial escaped GF(q)");
    c.generator_ = std::move(gen);
    return c;
}

CyclicCode CyclicCode::from_defining_set(FieldPtr field, Subfield alphabet, Elem gamma, const IndexSet& defining_set) {
    const std::uint64_t n = field->order_of(gamma);
    IndexSet e = defining_set;
    std::sort(e.begin(), e.end());
    return from_zeros(std::move(field), alphabet, gamma, complement(negate(e, n), n));
}

std::vector<int> CyclicCode::check_exponents() const {
    std::vector<int> out;
    const int n = static_cast<int>(n_);
    for (int s : zeros_) out.push_back(2 * s > n ? s - n : s);
    std::sort(out.begin(), out.end());
    return out;
}

Poly CyclicCode::check_polynomial() const {
    auto [quo, rem] = poly_divmod(*field_, x_pow_minus_one(*field_, n_), generator_);
    if (!rem.is_zero()) throw std::logic_error("generator does not divide x^n - 1");
    return quo;
}

Matrix CyclicCode::generator_matrix() const {
    const std::size_t k = dimension();
    Matrix g(k, n_);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i < generator_.coeffs().size(); ++i) g(r, r + i) = generator_.coeffs()[i];
    return g;
}

Codeword CyclicCode::encode(std::span<const Elem> message) const {
    if (message.size() != dimension()) throw std::invalid_argument("message length must equal dimension");
    const GaloisField& f = *field_;
    Codeword w(n_, f.zero());
    const auto& g = generator_.coeffs();
    for (std::size_t r = 0; r < message.size(); ++r) {
        if (message[r].v == 0) continue;
        for (std::size_t i = 0; i < g.size(); ++i) w[r + i] = f.add(w[r + i], f.mul(message[r], g[i]));
    }
    return w;
}

bool CyclicCode::contains(std::span<const Elem> w) const {
    if (w.size() != n_) throw std::invalid_argument("word length does not match code length");
    const GaloisField& f = *field_;
    for (Elem x : w)
        if (!f.is_in(x, alphabet_)) return false;
    for (int s : zeros_) {
        Elem acc = f.zero();
        std::size_t e = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (w[j].v != 0) acc = f.add(acc, f.mul(w[j], gamma_pow_[e]));
            e += static_cast<std::size_t>(s);
            if (e >= n_) e -= n_;
        }
        if (acc.v != 0) return false;
    }
    return true;
}

CyclicCode CyclicCode::dual() const {
    const GaloisField& f = *field_;
    CyclicCode d = from_zeros(field_, alphabet_, gamma_, negate(complement(zeros_, n_), n_));
    const Poly expected = poly_monic(f, poly_reciprocal(check_polynomial()));
    if (!(expected == d.generator_)) throw std::logic_error("dual generator differs from reciprocal check polynomial");
    return d;
}

CyclicCode CyclicCode::lift(int ell) const {
    if (ell < 1) throw std::invalid_argument("lift degree must be positive");
    const int target = alphabet_.degree * ell;
    CyclicCode out;
    if (field_->degree() % target == 0) {
        out = from_zeros(field_, field_->subfield(target), gamma_, zeros_);
    } else {
        const int d = std::lcm(field_->degree(), target);
        FieldPtr big = GaloisField::create(field_->characteristic(), d);
        const FieldEmbedding embed(field_, big);
        out = from_zeros(big, big->subfield(target), embed(gamma_), zeros_);
        for (std::size_t i = 0; i < generator_.coeffs().size(); ++i)
            if (embed(generator_.coeffs()[i]) != out.generator_.coeff(i))
                throw std::logic_error("lifted generator is not the embedded generator");
    }
    out.bch_ = bch_;
    return out;
}

bool CyclicCode::is_lcd() const {
    const Matrix g = generator_matrix();
    const Matrix h = dual().generator_matrix();
    return rank(*field_, stack(g, h)) == n_;
}

CyclicCode bch(FieldPtr field, std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::int64_t h) {
    const auto [p, k] = prime_power(q);
    if (p != field->characteristic()) throw std::invalid_argument("characteristic mismatch");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) != 1");
    if (delta < 2 || delta > n) throw std::invalid_argument("designed distance must satisfy 2 <= delta <= n");
    const GaloisField& f = *field;
    const Subfield alphabet = f.subfield(k);
    const Elem gamma = root_of_unity(f, n);

    const std::int64_t sn = static_cast<std::int64_t>(n);
    IndexSet zeros;
    Poly gen = Poly::constant(f.one());
    for (std::uint64_t i = 0; i + 2 <= delta; ++i) {
        const std::int64_t e = ((h + static_cast<std::int64_t>(i)) % sn + sn) % sn;
        for (int s : coset_of(e, q, n)) zeros.push_back(s);
        gen = poly_lcm(f, gen, minimal_polynomial(f, f.pow(gamma, e), alphabet));
    }
    CyclicCode c = CyclicCode::from_zeros(std::move(field), alphabet, gamma, std::move(zeros));
    if (!(c.generator_ == gen)) throw std::logic_error("BCH generator mismatch");
    c.bch_ = BchParams{delta, h};
    return c;
}

CyclicCode bch(std::uint64_t q, std::uint64_t n, std::uint64_t delta, std::int64_t h) {
    const auto [p, k] = prime_power(q);
    if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) != 1");
    const std::uint64_t ord = multiplicative_order_mod(q, n);
    return bch(GaloisField::create(p, k * static_cast<int>(ord)), q, n, delta, h);
}

CyclicCode antiprimitive_bch(std::uint64_t q, std::uint64_t delta) { return bch(q, q + 1, delta, 1); }

Codeword trace_codeword(const GaloisField& f, std::uint64_t q, std::span<const Elem> a) {
    const auto [p, k] = prime_power(q);
    (void)p;
    const Subfield base = f.subfield(k), quad = f.subfield(2 * k);
    for (Elem x : a)
        if (!f.is_in(x, quad)) throw std::invalid_argument("trace coefficients must lie in GF(q^2)");
    const Elem beta = f.norm_one_generator(q);
    Codeword c(q + 1, f.zero());
    Elem u = f.one();
    for (std::uint64_t j = 0; j <= q; ++j) {
        Elem acc = f.zero(), ui = u;
        for (Elem ai : a) {
            acc = f.add(acc, f.mul(ai, ui));
            ui = f.mul(ui, u);
        }
        c[j] = f.relative_trace(acc, quad, base);
        u = f.mul(u, beta);
    }
    return c;
}

LinearCode::LinearCode(FieldPtr field, Subfield alphabet, Matrix generator)
    : field_(std::move(field)), alphabet_(alphabet) {
    for (std::size_t r = 0; r < generator.rows(); ++r)
        for (Elem x : generator.row(r))
            if (!field_->is_in(x, alphabet_)) throw std::invalid_argument("generator entry outside GF(q)");
    const std::size_t cols = generator.cols();
    const auto pivots = rref(*field_, generator);
    generator_ = Matrix(0, cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) generator_.append_row(generator.row(r));
}

bool LinearCode::contains(std::span<const Elem> w) const {
    if (w.size() != length()) throw std::invalid_argument("word length does not match code length");
    for (Elem x : w)
        if (!field_->is_in(x, alphabet_)) return false;
    return in_row_space(*field_, generator_, w);
}

LinearCode LinearCode::dual() const {
    if (dimension() == 0) {
        Matrix id(length(), length());
        for (std::size_t i = 0; i < length(); ++i) id(i, i) = field_->one();
        return LinearCode(field_, alphabet_, id);
    }
    return LinearCode(field_, alphabet_, nullspace(*field_, generator_));
}

bool LinearCode::same_code(const LinearCode& o) const {
    return length() == o.length() && same_row_space(*field_, generator_, o.generator_);
}

LinearCode as_linear(const CyclicCode& c) {
    return LinearCode(c.field_ptr(), c.alphabet(), c.generator_matrix());
}

LinearCode scale(std::span<const Elem> a, const LinearCode& c) {
    if (a.size() != c.length()) throw std::invalid_argument("scale vector length mismatch");
    const GaloisField& f = c.field();
    Matrix g = c.generator_matrix();
    for (Elem x : a) {
        if (x.v == 0) throw std::invalid_argument("scale entries must be nonzero");
        if (!f.is_in(x, c.alphabet())) throw std::invalid_argument("scale entries must lie in GF(q)");
    }
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < g.cols(); ++j) g(r, j) = f.mul(g(r, j), a[j]);
    return LinearCode(c.field_ptr(), c.alphabet(), g);
}

bool verify_scaled_dual_identity(std::span<const Elem> a, const CyclicCode& c) {
    const GaloisField& f = c.field();
    std::vector<Elem> a_inv(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) a_inv[i] = f.inv(a[i]);
    const LinearCode lhs = scale(a, as_linear(c)).dual();
    const LinearCode rhs = scale(a_inv, as_linear(c.dual()));
    return lhs.same_code(rhs);
}

}  // namespace antibch
