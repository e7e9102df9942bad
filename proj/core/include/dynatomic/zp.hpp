#ifndef DYNATOMIC_ZP_HPP
#define DYNATOMIC_ZP_HPP

// Dense univariate arithmetic modulo a word-size prime. Internal workhorse
// behind the modular fast paths (gcd certificates, squarefree screening,
// CRT gcd reconstruction). Polynomials are coefficient vectors, lowest
// degree first, with no trailing zeros.

#include <cstdint>
#include <vector>

namespace dynatomic::zp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);
u64 next_prime(u64 n); // smallest prime > n

void trim(Poly& f);
inline long deg(const Poly& f) { return static_cast<long>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, u64 p);
Poly sub(const Poly& f, const Poly& g, u64 p);
Poly mul(const Poly& f, const Poly& g, u64 p);
Poly scale(const Poly& f, u64 c, u64 p);
void make_monic(Poly& f, u64 p);

// Euclidean division; divisor must be nonzero.
void divrem(const Poly& f, const Poly& g, Poly& q, Poly& r, u64 p);
Poly gcd(Poly f, Poly g, u64 p); // monic gcd

u64 eval(const Poly& f, u64 x, u64 p);
Poly derivative(const Poly& f, u64 p);

// x^e mod f, with e given in binary via repeated squaring of a base poly.
Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& f, u64 p);
Poly powmod_poly(Poly base, u64 e, const Poly& f, u64 p);

} // namespace dynatomic::zp

#endif
