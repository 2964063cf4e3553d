#include "antibch/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

namespace antibch {

namespace {

// Polynomials over the prime field GF(p), lowest degree first, no trailing zeros.
using ZpPoly = std::vector<std::uint32_t>;

void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    // f is monic
    while (a.size() > df) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * f[i]) % p);
        }
        trim(a);
    }
    return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    ZpPoly r(acc.begin(), acc.end());
    return zp_mod(std::move(r), f, p);
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& f, std::uint32_t p) {
    ZpPoly result{1};
    result = zp_mod(result, f, p);
    base = zp_mod(base, f, p);
    while (e > 0) {
        if (e & 1) result = zp_mulmod(result, base, f, p);
        e >>= 1;
        if (e) base = zp_mulmod(base, base, f, p);
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic so zp_mod applies
        const std::uint64_t li = mod_inverse(b.back(), p);
        for (auto& c : b) c = static_cast<std::uint32_t>(c * li % p);
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 2; r * r <= n; ++r) {
        if (n % r == 0) {
            out.push_back(r);
            while (n % r == 0) n /= r;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t r = 2; r * r <= n; ++r)
        if (n % r == 0) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::pair<std::uint32_t, int> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::uint64_t p = 0;
    for (std::uint64_t r = 2; r * r <= q; ++r) {
        if (q % r == 0) {
            p = r;
            break;
        }
    }
    if (p == 0) p = q;
    int k = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    return {static_cast<std::uint32_t>(p), k};
}

std::uint64_t multiplicative_order_mod(std::uint64_t r, std::uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(r, n) != 1) throw std::invalid_argument("gcd(r, n) != 1");
    std::uint64_t k = 1, x = r % n;
    while (x != 1) {
        x = x * r % n;
        ++k;
    }
    return k;
}

bool GaloisField::is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    ZpPoly f = modulus;
    trim(f);
    if (f.size() < 2 || f.back() != 1) return false;
    const int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    // gcd(x^(p^i) - x, f) = 1 for i <= d/2 rules out factors of degree <= d/2.
    ZpPoly h = zp_mod({0, 1}, f, p);
    for (int i = 1; i <= d / 2; ++i) {
        h = zp_powmod(h, p, f, p);
        ZpPoly t = h;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (t.empty()) return false;
        if (zp_gcd(f, t, p).size() != 1) return false;
    }
    return true;
}

bool GaloisField::is_primitive(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (!is_irreducible(p, modulus)) return false;
    const int d = static_cast<int>(modulus.size()) - 1;
    const std::uint64_t n = ipow(p, d) - 1;
    const ZpPoly x = zp_mod({0, 1}, modulus, p);
    if (x.empty()) return false;
    for (std::uint64_t r : prime_factors(n)) {
        if (zp_powmod(x, n / r, modulus, p) == ZpPoly{1}) return false;
    }
    return true;
}

std::vector<std::uint32_t> GaloisField::smallest_primitive_modulus(std::uint32_t p, int degree) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    const std::uint64_t total = ipow(p, degree);
    // Lower coefficients c_0..c_{d-1} are the base-p digits of t, so the scan
    // is lexicographic with c_{d-1} most significant.
    for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<std::uint32_t> f(degree + 1, 0);
        std::uint64_t s = t;
        for (int i = 0; i < degree; ++i) {
            f[i] = static_cast<std::uint32_t>(s % p);
            s /= p;
        }
        f[degree] = 1;
        if (is_primitive(p, f)) return f;
    }
    throw std::logic_error("no primitive polynomial found");
}

std::shared_ptr<const GaloisField> GaloisField::create(std::uint32_t p, int degree, bool use_tables) {
    return std::make_shared<const GaloisField>(p, smallest_primitive_modulus(p, degree), use_tables);
}

std::shared_ptr<const GaloisField> GaloisField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                                            bool use_tables) {
    return std::make_shared<const GaloisField>(p, std::move(modulus), use_tables);
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus, bool use_tables)
    : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    trim(modulus_);
    if (modulus_.size() < 2) throw std::invalid_argument("modulus must have positive degree");
    for (auto c : modulus_)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    d_ = static_cast<int>(modulus_.size()) - 1;
    const long double approx = std::pow(static_cast<long double>(p), d_);
    if (approx > 2147483648.0L) throw std::invalid_argument("field too large for 32-bit serialization");
    size_ = ipow(p, d_);
    if (!is_irreducible(p, modulus_)) throw std::invalid_argument("modulus is not irreducible");

    const bool prim = is_primitive(p, modulus_);
    if (use_tables && size_ <= kTableLimit) {
        build_tables(prim);
    } else if (prim) {
        primitive_ = from_coeffs(zp_mod({0, 1}, modulus_, p));
    } else {
        for (std::uint64_t s = 1; s < size_; ++s) {
            if (order_of(Elem{static_cast<std::uint32_t>(s)}) == size_ - 1) {
                primitive_ = Elem{static_cast<std::uint32_t>(s)};
                break;
            }
        }
    }
}

void GaloisField::build_tables(bool modulus_primitive) {
    const std::uint64_t n = size_ - 1;
    Elem g{};
    if (modulus_primitive) {
        g = from_coeffs(zp_mod({0, 1}, modulus_, p_));
    } else {
        const auto factors = prime_factors(n);
        for (std::uint64_t s = 1; s < size_; ++s) {
            Elem c{static_cast<std::uint32_t>(s)};
            bool ok = true;
            for (auto r : factors) {
                // slow power: tables do not exist yet
                Elem acc = one(), base = c;
                std::uint64_t e = n / r;
                while (e) {
                    if (e & 1) acc = slow_mul(acc, base);
                    base = slow_mul(base, base);
                    e >>= 1;
                }
                if (acc == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g = c;
                break;
            }
        }
    }
    primitive_ = g;

    exp_.assign(2 * n, 0);
    log_.assign(size_, kNoLog);
    Elem cur = one();
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = cur.v;
        exp_[i + n] = cur.v;
        log_[cur.v] = static_cast<std::uint32_t>(i);
        cur = slow_mul(cur, g);
    }
    if (cur != one()) throw std::logic_error("table generator is not primitive");

    if (p_ != 2) {
        zech_.assign(n, kNoLog);
        for (std::uint64_t k = 0; k < n; ++k) {
            const Elem s = slow_add(Elem{exp_[k]}, one());
            zech_[k] = s.v == 0 ? kNoLog : log_[s.v];
        }
    }
}

Elem GaloisField::element(std::uint64_t serial) const {
    if (serial >= size_) throw std::out_of_range("element serial out of range");
    return Elem{static_cast<std::uint32_t>(serial)};
}

Elem GaloisField::from_int(std::int64_t k) const {
    const std::int64_t p = p_;
    return Elem{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

std::vector<std::uint32_t> GaloisField::coeffs(Elem x) const {
    std::vector<std::uint32_t> c(d_, 0);
    std::uint32_t v = x.v;
    for (int i = 0; i < d_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Elem GaloisField::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > static_cast<std::size_t>(d_)) throw std::invalid_argument("too many coefficients");
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        v = v * p_ + c[i];
    }
    return Elem{static_cast<std::uint32_t>(v)};
}

Elem GaloisField::slow_add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.v ^ b.v};
    std::uint32_t x = a.v, y = b.v, out = 0, place = 1;
    for (int i = 0; i < d_; ++i) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return Elem{out};
}

Elem GaloisField::slow_neg(Elem a) const {
    if (p_ == 2) return a;
    std::uint32_t x = a.v, out = 0, place = 1;
    for (int i = 0; i < d_; ++i) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return Elem{out};
}

Elem GaloisField::slow_mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    const auto ca = coeffs(a), cb = coeffs(b);
    ZpPoly prod(2 * d_ - 1, 0);
    std::vector<std::uint64_t> acc(2 * d_ - 1, 0);
    for (int i = 0; i < d_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < d_; ++j) acc[i + j] = (acc[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
    }
    for (std::size_t i = 0; i < acc.size(); ++i) prod[i] = static_cast<std::uint32_t>(acc[i]);
    prod = zp_mod(std::move(prod), modulus_, p_);
    prod.resize(d_, 0);
    return from_coeffs(prod);
}

Elem GaloisField::add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.v ^ b.v};
    if (zech_.empty()) return slow_add(a, b);
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t n = static_cast<std::uint32_t>(size_ - 1);
    const std::uint32_t la = log_[a.v], lb = log_[b.v];
    const std::uint32_t k = lb >= la ? lb - la : lb + n - la;
    const std::uint32_t z = zech_[k];
    if (z == kNoLog) return zero();
    return Elem{exp_[la + z]};
}

Elem GaloisField::neg(Elem a) const {
    if (p_ == 2 || a.v == 0) return a;
    if (exp_.empty()) return slow_neg(a);
    return Elem{exp_[log_[a.v] + (size_ - 1) / 2]};
}

Elem GaloisField::mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    if (exp_.empty()) return slow_mul(a, b);
    return Elem{exp_[log_[a.v] + log_[b.v]]};
}

Elem GaloisField::inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    if (exp_.empty()) return pow(a, static_cast<std::int64_t>(size_ - 2));
    return Elem{exp_[(size_ - 1) - log_[a.v]]};
}

Elem GaloisField::pow(Elem a, std::int64_t e) const {
    if (a.v == 0) {
        if (e == 0) return one();
        if (e < 0) throw std::domain_error("negative power of zero");
        return zero();
    }
    const std::int64_t n = static_cast<std::int64_t>(size_ - 1);
    const std::uint64_t r = static_cast<std::uint64_t>(((e % n) + n) % n);
    if (!exp_.empty()) return Elem{exp_[static_cast<std::uint64_t>(log_[a.v]) * r % (size_ - 1)]};
    Elem result = one(), base = a;
    std::uint64_t k = r;
    while (k) {
        if (k & 1) result = slow_mul(result, base);
        base = slow_mul(base, base);
        k >>= 1;
    }
    return result;
}

Elem GaloisField::frobenius(Elem x, std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative Frobenius exponent");
    const std::int64_t r = e % d_;
    if (r == 0 || x.v == 0) return x;
    return pow(x, static_cast<std::int64_t>(ipow(p_, static_cast<unsigned>(r))));
}

Subfield GaloisField::subfield(int degree) const {
    if (degree < 1 || d_ % degree != 0)
        throw std::invalid_argument("subfield degree " + std::to_string(degree) + " does not divide " +
                                    std::to_string(d_));
    return Subfield{degree};
}

std::uint64_t GaloisField::subfield_size(Subfield sub) const {
    (void)subfield(sub.degree);
    return ipow(p_, sub.degree);
}

Elem GaloisField::trace(Elem x, Subfield sub) const {
    (void)subfield(sub.degree);
    Elem acc = zero();
    for (int i = 0; i < d_ / sub.degree; ++i) acc = add(acc, frobenius(x, std::int64_t{sub.degree} * i));
    return acc;
}

Elem GaloisField::relative_trace(Elem x, Subfield from, Subfield to) const {
    (void)subfield(from.degree);
    if (to.degree < 1 || from.degree % to.degree != 0) throw std::invalid_argument("relative trace: degrees do not nest");
    Elem acc = zero();
    for (int i = 0; i < from.degree / to.degree; ++i) acc = add(acc, frobenius(x, std::int64_t{to.degree} * i));
    return acc;
}

Elem GaloisField::norm(Elem x, Subfield sub) const {
    (void)subfield(sub.degree);
    Elem acc = one();
    for (int i = 0; i < d_ / sub.degree; ++i) acc = mul(acc, frobenius(x, std::int64_t{sub.degree} * i));
    return acc;
}

std::vector<Elem> GaloisField::elements(Subfield sub) const {
    const std::uint64_t qs = subfield_size(sub);
    std::vector<Elem> out;
    out.reserve(qs);
    if (sub.degree == d_) {
        for (std::uint64_t s = 0; s < size_; ++s) out.push_back(Elem{static_cast<std::uint32_t>(s)});
        return out;
    }
    out.push_back(zero());
    const std::uint64_t n = size_ - 1, step = n / (qs - 1);
    const Elem g = pow(primitive_, static_cast<std::int64_t>(step));
    Elem cur = one();
    for (std::uint64_t k = 0; k + 1 < qs; ++k) {
        out.push_back(cur);
        cur = mul(cur, g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t GaloisField::order_of(Elem x) const {
    if (x.v == 0) throw std::domain_error("order of zero");
    std::uint64_t ord = size_ - 1;
    for (auto r : prime_factors(size_ - 1)) {
        while (ord % r == 0 && pow(x, static_cast<std::int64_t>(ord / r)) == one()) ord /= r;
    }
    return ord;
}

Elem GaloisField::norm_one_generator(std::uint64_t q) const {
    const auto [pq, k] = prime_power(q);
    if (pq != p_ || d_ % (2 * k) != 0)
        throw std::invalid_argument("GF(q^2) is not a subfield of this field for q = " + std::to_string(q));
    const Elem beta = pow(primitive_, static_cast<std::int64_t>((size_ - 1) / (q + 1)));
    if (order_of(beta) != q + 1) throw std::logic_error("norm-one generator has wrong order");
    return beta;
}

FieldEmbedding::FieldEmbedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
    if (from_->characteristic() != to_->characteristic() || to_->degree() % from_->degree() != 0)
        throw std::invalid_argument("no embedding between these fields");
    const auto& mod = from_->modulus();
    std::optional<Elem> root;
    for (std::uint64_t s = 0; s < to_->size() && !root; ++s) {
        const Elem x{static_cast<std::uint32_t>(s)};
        Elem acc = to_->zero();
        for (std::size_t i = mod.size(); i-- > 0;) acc = to_->add(to_->mul(acc, x), to_->from_int(mod[i]));
        if (acc == to_->zero()) root = x;
    }
    if (!root) throw std::logic_error("modulus has no root in the target field");
    Elem pw = to_->one();
    for (int i = 0; i < from_->degree(); ++i) {
        basis_images_.push_back(pw);
        pw = to_->mul(pw, *root);
    }
}

Elem FieldEmbedding::operator()(Elem x) const {
    const auto c = from_->coeffs(x);
    Elem acc = to_->zero();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) acc = to_->add(acc, to_->mul(to_->from_int(c[i]), basis_images_[i]));
    return acc;
}

}  // namespace antibch
