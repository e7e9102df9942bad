#include "dynatomic/finite_field.hpp"

#include <sstream>
#include <stdexcept>

namespace dynatomic {

namespace {

std::vector<int> prime_factors(int k) {
    std::vector<int> out;
    for (int q = 2; q * q <= k; ++q) {
        if (k % q) continue;
        out.push_back(q);
        while (k % q == 0) k /= q;
    }
    if (k > 1) out.push_back(k);
    return out;
}

// x^(p^j) mod m via j-fold exponentiation by p (avoids p^j overflow).
zp::Poly frobenius_of_x(const zp::Poly& m, zp::u64 p, int j) {
    zp::Poly x{0, 1};
    zp::Poly acc = x;
    for (int i = 0; i < j; ++i) acc = zp::powmod_poly(acc, p, m, p);
    return acc;
}

} // namespace

bool is_irreducible_mod_p(const zp::Poly& m, zp::u64 p) {
    long k = zp::deg(m);
    if (k < 1) return false;
    if (k == 1) return true;
    zp::Poly x{0, 1};
    // x^(p^k) == x mod m
    zp::Poly xq = frobenius_of_x(m, p, static_cast<int>(k));
    if (zp::sub(xq, x, p) != zp::Poly{}) return false;
    for (int q : prime_factors(static_cast<int>(k))) {
        zp::Poly xr = frobenius_of_x(m, p, static_cast<int>(k) / q);
        zp::Poly diff = zp::sub(xr, x, p);
        if (zp::deg(zp::gcd(diff, m, p)) != 0) return false;
    }
    return true;
}

GFContext::GFContext(zp::u64 p, int k, zp::Poly modulus, zp::u64 size)
    : p_(p), k_(k), modulus_(std::move(modulus)), size_(size) {}

std::shared_ptr<const GFContext> GFContext::make(zp::u64 p, int k) {
    if (k < 1) throw std::invalid_argument("GFContext: extension degree must be >= 1");
    if (p < 2 || !zp::is_prime(p)) throw std::invalid_argument("GFContext: characteristic must be prime");
    zp::u64 size = 1;
    for (int i = 0; i < k; ++i) {
        if (size > (zp::u64{1} << 62) / p) throw std::overflow_error("GFContext: field too large");
        size *= p;
    }
    zp::Poly m(k + 1, 0);
    m[k] = 1;
    if (k > 1) {
        bool found = false;
        for (zp::u64 idx = 0; idx < size; ++idx) {
            zp::u64 v = idx;
            for (int i = 0; i < k; ++i) {
                m[i] = v % p;
                v /= p;
            }
            if (is_irreducible_mod_p(m, p)) { found = true; break; }
        }
        if (!found) throw std::logic_error("GFContext: no irreducible modulus found");
    }
    return std::shared_ptr<const GFContext>(new GFContext(p, k, std::move(m), size));
}

GFContext::Elem GFContext::one() const {
    Elem e(k_, 0);
    e[0] = 1 % p_;
    return e;
}

GFContext::Elem GFContext::from_int(std::int64_t n) const {
    Elem e(k_, 0);
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    e[0] = static_cast<zp::u64>(r);
    return e;
}

GFContext::Elem GFContext::from_rational(const Rational& q) const {
    Integer dm = denominator(q) % static_cast<long long>(p_);
    if (dm < 0) dm += static_cast<long long>(p_);
    if (dm == 0) throw std::domain_error("from_rational: denominator vanishes mod p");
    Integer nm = numerator(q) % static_cast<long long>(p_);
    if (nm < 0) nm += static_cast<long long>(p_);
    Elem e(k_, 0);
    e[0] = zp::mulmod(static_cast<zp::u64>(nm),
                      zp::invmod(static_cast<zp::u64>(dm), p_), p_);
    return e;
}

bool GFContext::is_zero(const Elem& a) const {
    for (auto c : a) if (c != 0) return false;
    return true;
}

GFContext::Elem GFContext::add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (int i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

GFContext::Elem GFContext::sub(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (int i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

GFContext::Elem GFContext::neg(const Elem& a) const {
    Elem r(k_);
    for (int i = 0; i < k_; ++i) r[i] = (p_ - a[i]) % p_;
    return r;
}

GFContext::Elem GFContext::mul(const Elem& a, const Elem& b) const {
    if (k_ == 1) return Elem{zp::mulmod(a[0], b[0], p_)};
    zp::Poly prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < k_; ++j) {
            prod[i + j] = (prod[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p_;
        }
    }
    zp::trim(prod);
    zp::Poly q, r;
    zp::divrem(prod, modulus_, q, r, p_);
    r.resize(k_, 0);
    return r;
}

GFContext::Elem GFContext::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("GF inverse of zero");
    if (k_ == 1) return Elem{zp::invmod(a[0], p_)};
    // Extended Euclid in F_p[u] against the modulus.
    zp::Poly r0 = modulus_, r1 = a;
    zp::trim(r1);
    zp::Poly s0{}, s1{1};
    while (!r1.empty()) {
        zp::Poly q, r2;
        zp::divrem(r0, r1, q, r2, p_);
        zp::Poly s2 = zp::sub(s0, zp::mul(q, s1, p_), p_);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since the modulus is irreducible)
    zp::u64 c = zp::invmod(r0[0], p_);
    zp::Poly res = zp::scale(s0, c, p_);
    res.resize(k_, 0);
    return res;
}

GFContext::Elem GFContext::pow(Elem a, zp::u64 e) const {
    Elem acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

GFContext::Elem GFContext::frobenius(const Elem& a, int j) const {
    Elem r = a;
    for (int i = 0; i < j; ++i) r = pow(r, p_);
    return r;
}

int GFContext::minimal_degree(const Elem& a) const {
    for (int d = 1; d <= k_; ++d) {
        if (k_ % d != 0) continue;
        if (frobenius(a, d) == a) return d;
    }
    throw std::logic_error("minimal_degree: element not fixed by Frobenius^k");
}

GFContext::Elem GFContext::element_at(zp::u64 index) const {
    Elem e(k_, 0);
    for (int i = 0; i < k_; ++i) {
        e[i] = index % p_;
        index /= p_;
    }
    return e;
}

std::string GFContext::to_string(const Elem& a) const {
    if (k_ == 1) return std::to_string(a[0]);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < k_; ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << "]";
    return os.str();
}

std::string GFContext::name() const {
    std::ostringstream os;
    os << "F" << p_;
    if (k_ > 1) os << "^" << k_;
    return os.str();
}

GFContext::Elem subfield_embedding(const GFContext& small, const GFContext& big) {
    if (small.p() != big.p() || big.k() % small.k() != 0) {
        throw std::invalid_argument("subfield_embedding: not a subfield");
    }
    if (small.k() == 1) return big.one();
    for (zp::u64 i = 0; i < big.size(); ++i) {
        GFContext::Elem x = big.element_at(i);
        // Evaluate the small modulus at x inside the big field.
        GFContext::Elem acc = big.zero();
        for (size_t j = small.modulus().size(); j-- > 0;) {
            acc = big.mul(acc, x);
            acc = big.add(acc, big.from_int(static_cast<std::int64_t>(small.modulus()[j])));
        }
        if (big.is_zero(acc)) return x;
    }
    throw std::logic_error("subfield_embedding: no root of the modulus found");
}

} // namespace dynatomic
