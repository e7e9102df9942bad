#include "dynatomic/qpoly.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <gmp.h>
#include <sstream>
#include <stdexcept>

namespace dynatomic::zp {

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sufficient witness set for all 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

u64 next_prime(u64 n) {
    u64 c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime(c)) c += 2;
    return c;
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& f, const Poly& g, u64 p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + g[i]) % p;
    trim(r);
    return r;
}

Poly sub(const Poly& f, const Poly& g, u64 p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + p - g[i]) % p;
    trim(r);
    return r;
}

Poly mul(const Poly& f, const Poly& g, u64 p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) {
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(f[i]) * g[j]) % p;
        }
    }
    trim(r);
    return r;
}

Poly scale(const Poly& f, u64 c, u64 p) {
    Poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = mulmod(f[i], c, p);
    trim(r);
    return r;
}

void make_monic(Poly& f, u64 p) {
    if (f.empty() || f.back() == 1) return;
    f = scale(f, invmod(f.back(), p), p);
}

void divrem(const Poly& f, const Poly& g, Poly& q, Poly& r, u64 p) {
    if (g.empty()) throw std::domain_error("zp::divrem: division by zero polynomial");
    r = f;
    if (f.size() < g.size()) { q.clear(); return; }
    q.assign(f.size() - g.size() + 1, 0);
    const u64 linv = invmod(g.back(), p);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        if (r.size() < g.size() + i) continue;
        u64 c = mulmod(r[g.size() - 1 + i], linv, p);
        if (c == 0) { if (r.size() == g.size() + i) r.pop_back(); continue; }
        q[i] = c;
        for (size_t j = 0; j < g.size(); ++j) {
            u64& slot = r[i + j];
            slot = (slot + p - mulmod(c, g[j], p)) % p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    trim(r);
}

Poly gcd(Poly f, Poly g, u64 p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly q, r;
        divrem(f, g, q, r, p);
        f = std::move(g);
        g = std::move(r);
    }
    make_monic(f, p);
    return f;
}

u64 eval(const Poly& f, u64 x, u64 p) {
    u64 r = 0;
    for (size_t i = f.size(); i-- > 0;) r = (mulmod(r, x, p) + f[i]) % p;
    return r;
}

Poly derivative(const Poly& f, u64 p) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], i % p, p);
    trim(r);
    return r;
}

Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    Poly q, r;
    divrem(mul(a, b, p), f, q, r, p);
    return r;
}

Poly powmod_poly(Poly base, u64 e, const Poly& f, u64 p) {
    Poly q, r;
    divrem(base, f, q, base, p);
    Poly acc{1};
    while (e) {
        if (e & 1) acc = mulmod_poly(acc, base, f, p);
        base = mulmod_poly(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

} // namespace dynatomic::zp

namespace dynatomic::qp {

namespace {

mpz_srcptr raw(const Integer& z) { return z.backend().data(); }
mpz_ptr raw(Integer& z) { return z.backend().data(); }

Integer lcm_of_denominators(const QPoly& f) {
    Integer den = 1;
    for (const auto& c : f) {
        Integer d = denominator(c);
        den = lcm(den, d);
    }
    return den;
}

} // namespace

void trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly constant(const Rational& c) {
    if (c == 0) return {};
    return {c};
}

QPoly monomial(long k, const Rational& c) {
    if (c == 0) return {};
    QPoly f(k + 1, Rational(0));
    f[k] = c;
    return f;
}

bool equal(const QPoly& f, const QPoly& g) { return f == g; }

Rational lc(const QPoly& f) {
    if (f.empty()) throw std::domain_error("lc of zero polynomial");
    return f.back();
}

QPoly make_monic(const QPoly& f) {
    if (f.empty()) return f;
    return scale(f, Rational(1) / f.back());
}

QPoly neg(const QPoly& f) {
    QPoly r(f);
    for (auto& c : r) c = -c;
    return r;
}

QPoly add(const QPoly& f, const QPoly& g) {
    QPoly r(std::max(f.size(), g.size()), Rational(0));
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& f, const QPoly& g) {
    QPoly r(std::max(f.size(), g.size()), Rational(0));
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    trim(r);
    return r;
}

QPoly scale(const QPoly& f, const Rational& c) {
    if (c == 0) return {};
    QPoly r(f);
    for (auto& x : r) x *= c;
    return r;
}

QPoly mul_schoolbook(const QPoly& f, const QPoly& g) {
    if (f.empty() || g.empty()) return {};
    QPoly r(f.size() + g.size() - 1, Rational(0));
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
    }
    trim(r);
    return r;
}

void to_integer(const QPoly& f, std::vector<Integer>& F, Integer& den) {
    den = lcm_of_denominators(f);
    F.assign(f.size(), Integer(0));
    for (size_t i = 0; i < f.size(); ++i) {
        F[i] = numerator(f[i]) * (den / denominator(f[i]));
    }
}

QPoly mul_kronecker(const QPoly& f, const QPoly& g) {
    if (f.empty() || g.empty()) return {};
    std::vector<Integer> F, G;
    Integer df, dg;
    to_integer(f, F, df);
    to_integer(g, G, dg);

    size_t maxbits_f = 1, maxbits_g = 1;
    for (const auto& c : F) maxbits_f = std::max(maxbits_f, mpz_sizeinbase(raw(c), 2));
    for (const auto& c : G) maxbits_g = std::max(maxbits_g, mpz_sizeinbase(raw(c), 2));
    size_t minlen = std::min(F.size(), G.size());
    size_t lg = 0;
    while ((size_t{1} << lg) < minlen) ++lg;
    // Digit bound: |c_i| <= minlen * maxF * maxG < 2^(W-1).
    const mp_bitcnt_t W = static_cast<mp_bitcnt_t>(maxbits_f + maxbits_g + lg + 1);

    Integer A = 0, B = 0, tmp;
    for (size_t i = F.size(); i-- > 0;) {
        mpz_mul_2exp(raw(A), raw(A), W);
        A += F[i];
    }
    for (size_t i = G.size(); i-- > 0;) {
        mpz_mul_2exp(raw(B), raw(B), W);
        B += G[i];
    }
    Integer C = A * B;

    const Rational dd = Rational(1) / Rational(df * dg);
    QPoly r(F.size() + G.size() - 1, Rational(0));
    Integer u, half = Integer(1) << (W - 1);
    for (size_t i = 0; i < r.size(); ++i) {
        mpz_fdiv_r_2exp(raw(u), raw(C), W); // 0 <= u < 2^W
        if (u >= half) u -= Integer(1) << W;
        C -= u;
        mpz_tdiv_q_2exp(raw(C), raw(C), W);
        if (!u.is_zero()) r[i] = Rational(u) * dd;
    }
    trim(r);
    return r;
}

QPoly mul(const QPoly& f, const QPoly& g) {
    if (f.size() < 24 || g.size() < 24) return mul_schoolbook(f, g);
    return mul_kronecker(f, g);
}

QPoly pow(const QPoly& f, long e) {
    if (e < 0) throw std::invalid_argument("qp::pow: negative exponent");
    QPoly acc{Rational(1)};
    QPoly base = f;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

Rational eval(const QPoly& f, const Rational& x) {
    Rational r = 0;
    for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

QPoly derivative(const QPoly& f) {
    if (f.size() <= 1) return {};
    QPoly r(f.size() - 1, Rational(0));
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Rational(static_cast<long>(i));
    trim(r);
    return r;
}

QPoly compose(const QPoly& f, const QPoly& g) {
    if (f.empty()) return {};
    QPoly r = constant(f.back());
    for (size_t i = f.size() - 1; i-- > 0;) {
        r = mul(r, g);
        if (f[i] != 0) {
            if (r.empty()) r = constant(f[i]);
            else r[0] += f[i];
        }
        trim(r);
    }
    return r;
}

QPoly shift(const QPoly& f, const Rational& c) { return compose(f, QPoly{c, Rational(1)}); }

void divrem(const QPoly& f, const QPoly& g, QPoly& q, QPoly& r) {
    if (g.empty()) throw std::domain_error("qp::divrem: division by zero polynomial");
    r = f;
    trim(r);
    if (r.size() < g.size()) { q.clear(); return; }
    q.assign(r.size() - g.size() + 1, Rational(0));
    const Rational linv = Rational(1) / g.back();
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        if (r.size() < g.size() + i) continue;
        Rational c = r[g.size() - 1 + i] * linv;
        if (c == 0) { if (r.size() == g.size() + i) r.pop_back(); continue; }
        q[i] = c;
        for (size_t j = 0; j < g.size(); ++j) r[i + j] -= c * g[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    trim(q);
    trim(r);
}

bool exact_divide(const QPoly& f, const QPoly& g, QPoly& q) {
    QPoly r;
    divrem(f, g, q, r);
    return r.empty();
}

long order_at(const QPoly& f, const Rational& r) {
    if (f.empty()) throw std::domain_error("order_at: zero polynomial");
    QPoly cur = f;
    long ord = 0;
    while (true) {
        // Synthetic division by (x - r): b_{k-1} = a_k, b_{i-1} = a_i + r*b_i,
        // remainder a_0 + r*b_0 = cur(r).
        Rational rem;
        QPoly next;
        if (cur.size() == 1) {
            rem = cur[0];
        } else {
            next.assign(cur.size() - 1, Rational(0));
            next.back() = cur.back();
            for (size_t i = cur.size() - 2; i >= 1; --i) next[i - 1] = cur[i] + r * next[i];
            rem = cur[0] + r * next[0];
        }
        if (rem != 0) return ord;
        ++ord;
        cur = std::move(next);
        if (cur.empty()) return ord; // happens only for linear input
    }
}

namespace {

// Primitive part over Z and content sign normalization (lc > 0).
void primitive_int(std::vector<Integer>& F) {
    Integer c = 0;
    for (const auto& x : F) c = gcd(c, x);
    if (c == 0) return;
    if (F.back() < 0) c = -c;
    for (auto& x : F) x /= c;
}

bool reduce_int_mod(const std::vector<Integer>& F, zp::u64 p, zp::Poly& out) {
    out.assign(F.size(), 0);
    Integer t;
    for (size_t i = 0; i < F.size(); ++i) {
        t = F[i] % static_cast<long long>(p);
        if (t < 0) t += static_cast<long long>(p);
        out[i] = static_cast<zp::u64>(t);
    }
    zp::trim(out);
    return !F.empty() && out.size() == F.size(); // lc must survive
}

// Wang rational reconstruction: find n/d = a mod m with |n|, d <= sqrt(m/2).
bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
    Integer bound;
    mpz_sqrt(raw(bound), Integer(m / 2).backend().data());
    Integer r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Integer s0 = 0, s1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (s1 == 0) return false;
    if (s1 < 0) { s1 = -s1; r1 = -r1; }
    if (gcd(r1, s1) != 1) return false;
    if (s1 > bound) return false;
    out = Rational(r1) / Rational(s1);
    return true;
}

bool divides_int(const std::vector<Integer>& F, const QPoly& h) {
    QPoly f(F.size());
    for (size_t i = 0; i < F.size(); ++i) f[i] = Rational(F[i]);
    trim(f);
    QPoly q;
    return exact_divide(f, h, q);
}

} // namespace

bool reduce_mod(const QPoly& f, zp::u64 p, zp::Poly& out) {
    out.assign(f.size(), 0);
    Integer t;
    for (size_t i = 0; i < f.size(); ++i) {
        Integer den = denominator(f[i]);
        Integer dm = den % static_cast<long long>(p);
        if (dm < 0) dm += static_cast<long long>(p);
        if (dm == 0) return false;
        Integer num = numerator(f[i]) % static_cast<long long>(p);
        if (num < 0) num += static_cast<long long>(p);
        out[i] = zp::mulmod(static_cast<zp::u64>(num),
                            zp::invmod(static_cast<zp::u64>(dm), p), p);
    }
    zp::trim(out);
    if (!f.empty() && out.size() != f.size()) return false; // lc vanished
    return true;
}

QPoly gcd(const QPoly& f, const QPoly& g) {
    QPoly a = f, b = g;
    trim(a);
    trim(b);
    if (a.empty()) return make_monic(b);
    if (b.empty()) return make_monic(a);

    std::vector<Integer> F, G;
    Integer df, dg;
    to_integer(a, F, df);
    to_integer(b, G, dg);
    primitive_int(F);
    primitive_int(G);

    zp::u64 p = (zp::u64{1} << 61);
    long best_deg = std::min(deg(a), deg(b)) + 1;
    std::vector<Integer> crt;      // CRT-accumulated monic image coefficients
    Integer modulus = 1;
    int stable = 0;

    for (int iter = 0; iter < 4096; ++iter) {
        p = zp::next_prime(p);
        zp::Poly Fp, Gp;
        if (!reduce_int_mod(F, p, Fp) || !reduce_int_mod(G, p, Gp)) continue;
        zp::Poly gp = zp::gcd(Fp, Gp, p);
        long d = zp::deg(gp);
        if (d == 0) return QPoly{Rational(1)}; // certified coprime
        if (d > best_deg) continue; // bad prime
        if (d < best_deg) {
            best_deg = d;
            crt.assign(d + 1, Integer(0));
            modulus = 1;
            stable = 0;
        }
        // CRT-merge gp into crt (symmetric range).
        Integer np = modulus * Integer(static_cast<long long>(p));
        for (long i = 0; i <= d; ++i) {
            // x ≡ crt[i] (mod modulus), x ≡ gp[i] (mod p)
            Integer rp = Integer(static_cast<long long>(gp[static_cast<size_t>(i)]));
            Integer diff = (rp - crt[static_cast<size_t>(i)]) % Integer(static_cast<long long>(p));
            if (diff < 0) diff += static_cast<long long>(p);
            Integer minv = modulus % static_cast<long long>(p);
            if (minv < 0) minv += static_cast<long long>(p);
            zp::u64 mi = zp::invmod(static_cast<zp::u64>(minv), p);
            Integer k = (diff * Integer(static_cast<long long>(mi))) % Integer(static_cast<long long>(p));
            crt[static_cast<size_t>(i)] += k * modulus;
            crt[static_cast<size_t>(i)] %= np;
        }
        modulus = np;
        ++stable;
        if (stable < 1) continue;
        // Attempt rational reconstruction of the monic gcd.
        QPoly h(best_deg + 1, Rational(0));
        bool ok = true;
        for (long i = 0; i <= best_deg && ok; ++i) {
            ok = rational_reconstruct(crt[static_cast<size_t>(i)], modulus, h[static_cast<size_t>(i)]);
        }
        if (!ok) continue;
        trim(h);
        if (deg(h) != best_deg) continue;
        if (divides_int(F, h) && divides_int(G, h)) return make_monic(h);
    }
    throw std::runtime_error("qp::gcd: modular reconstruction did not converge");
}

std::vector<std::pair<QPoly, long>> squarefree_decomposition(const QPoly& f) {
    if (f.empty()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<QPoly, long>> out;
    if (deg(f) == 0) return out;
    QPoly fm = make_monic(f);
    QPoly g = gcd(fm, derivative(fm));
    if (deg(g) == 0) {
        out.emplace_back(fm, 1);
        return out;
    }
    // Yun's algorithm.
    QPoly c, d, tmp;
    exact_divide(fm, g, c);
    QPoly fp = derivative(fm);
    exact_divide(fp, g, tmp);
    d = sub(tmp, derivative(c));
    long i = 1;
    while (deg(c) > 0) {
        QPoly a = gcd(c, d);
        if (deg(a) > 0) out.emplace_back(a, i);
        QPoly c2;
        exact_divide(c, a, c2);
        QPoly d2;
        exact_divide(d, a, d2);
        d = sub(d2, derivative(c2));
        c = std::move(c2);
        ++i;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    return out;
}

QPoly squarefree_part(const QPoly& f) {
    QPoly r{Rational(1)};
    for (const auto& [block, mult] : squarefree_decomposition(f)) r = mul(r, block);
    return r;
}

namespace {

Rational rpow(Rational base, long e) {
    Rational acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

} // namespace

Rational resultant(const QPoly& f, const QPoly& g) {
    // Euclidean PRS with the standard leading-coefficient bookkeeping:
    // res(f,g) = (-1)^(deg f * deg g) lc(g)^(deg f - deg r) res(g, r).
    QPoly a = f, b = g;
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return Rational(0);
    Rational res = 1;
    while (true) {
        if (deg(b) == 0) {
            res *= rpow(b[0], deg(a));
            break;
        }
        if (deg(a) < deg(b)) {
            if ((deg(a) % 2) != 0 && (deg(b) % 2) != 0) res = -res;
            std::swap(a, b);
            continue;
        }
        QPoly q, r;
        divrem(a, b, q, r);
        if (r.empty()) return Rational(0);
        res *= rpow(b.back(), deg(a) - deg(r));
        if ((deg(a) % 2) != 0 && (deg(b) % 2) != 0) res = -res;
        a = std::move(b);
        b = std::move(r);
    }
    return res;
}

Rational discriminant(const QPoly& f) {
    if (deg(f) < 1) throw std::domain_error("discriminant needs degree >= 1");
    Rational r = resultant(f, derivative(f)) / lc(f);
    long d = deg(f);
    if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
    return r;
}

namespace {

std::vector<Integer> positive_divisors_capped(const Integer& n0, size_t cap) {
    Integer n = abs(n0);
    if (n == 0) return {};
    if (mpz_sizeinbase(n.backend().data(), 2) > 48) {
        throw std::overflow_error("rational_roots: coefficient too large for exact root enumeration");
    }
    std::vector<Integer> small, large;
    Integer d = 1;
    while (d * d <= n) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
            if (small.size() + large.size() > cap) throw std::overflow_error(
                "rational_roots: divisor enumeration too large");
        }
        ++d;
        if (d > (Integer(1) << 24)) throw std::overflow_error(
            "rational_roots: coefficient too large for exact root enumeration");
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<std::pair<Rational, long>> rational_roots(const QPoly& f) {
    if (f.empty()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, long>> out;
    QPoly cur = f;
    trim(cur);
    // Strip x = 0.
    size_t z = 0;
    while (z < cur.size() && cur[z] == 0) ++z;
    if (z > 0) {
        out.emplace_back(Rational(0), static_cast<long>(z));
        cur.erase(cur.begin(), cur.begin() + z);
    }
    if (deg(cur) < 1) return out;

    std::vector<Integer> F;
    Integer den;
    to_integer(cur, F, den);
    primitive_int(F);
    const auto ps = positive_divisors_capped(F.front(), 100000);
    const auto qs = positive_divisors_capped(F.back(), 100000);
    if (static_cast<double>(ps.size()) * static_cast<double>(qs.size()) > 4.0e6) {
        throw std::overflow_error("rational_roots: candidate set too large");
    }
    for (const auto& pnum : ps) {
        for (const auto& qden : qs) {
            if (gcd(pnum, qden) != 1) continue;
            for (int sign : {1, -1}) {
                Rational cand = Rational(sign * pnum) / Rational(qden);
                long ord = order_at(cur, cand);
                if (ord > 0) out.emplace_back(cand, ord);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::string to_string(const QPoly& f, const std::string& var) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        Rational c = f[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << dynatomic::to_string(c);
        } else {
            if (c != 1) os << dynatomic::to_string(c) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace dynatomic::qp

namespace dynatomic {

Rational parse_rational(const std::string& text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty rational literal");
    std::string s = text.substr(a, b - a + 1);
    try {
        Rational r(s);
        Integer d = denominator(r);
        if (d == 0) throw std::invalid_argument("zero denominator");
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
}

std::string to_string(const Rational& q) { return q.str(); }

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_int64: not an integer");
    Integer n = numerator(q);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("to_int64: out of range");
    }
    return static_cast<std::int64_t>(n);
}

} // namespace dynatomic
