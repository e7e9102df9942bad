#ifndef DYNATOMIC_FINITE_FIELD_HPP
#define DYNATOMIC_FINITE_FIELD_HPP

#include "dynatomic/rational.hpp"
#include "dynatomic/zp.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dynatomic {

// F_{p^k} realized as F_p[u]/(m(u)) with a deterministic monic irreducible m:
// the first irreducible when candidate coefficient vectors (a_0,...,a_{k-1})
// are enumerated in ascending lexicographic order from the constant term up.
// Elements are coefficient vectors of fixed length k in the u-basis, so point
// coordinates are reproducible across runs.
class GFContext {
public:
    using Elem = std::vector<zp::u64>;

    static std::shared_ptr<const GFContext> make(zp::u64 p, int k);

    zp::u64 p() const { return p_; }
    int k() const { return k_; }
    const zp::Poly& modulus() const { return modulus_; }
    zp::u64 size() const { return size_; } // p^k; throws in make() if > 2^62

    Elem zero() const { return Elem(k_, 0); }
    Elem one() const;
    Elem from_int(std::int64_t n) const;
    Elem from_rational(const Rational& q) const; // throws if denominator ≡ 0 mod p

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const; // throws on zero
    Elem pow(Elem a, zp::u64 e) const;

    Elem frobenius(const Elem& a, int j = 1) const; // a^(p^j)
    // Smallest d | k with a^(p^d) = a: the degree of F_p(a) over F_p.
    int minimal_degree(const Elem& a) const;

    Elem element_at(zp::u64 index) const; // base-p digits of index
    std::string to_string(const Elem& a) const;
    std::string name() const; // e.g. "F5" or "F5^2"

    bool same(const GFContext& other) const { return p_ == other.p_ && k_ == other.k_; }

private:
    GFContext(zp::u64 p, int k, zp::Poly modulus, zp::u64 size);
    zp::u64 p_;
    int k_;
    zp::Poly modulus_;
    zp::u64 size_;
};

using GFPtr = std::shared_ptr<const GFContext>;

// Is m irreducible over F_p? (Rabin's criterion via iterated Frobenius.)
bool is_irreducible_mod_p(const zp::Poly& m, zp::u64 p);

// Image of the small field's generator u inside the big field, found by
// scanning for a root of the small modulus. Requires small.k() | big.k() and
// equal characteristic. Desk-scale search; deterministic (first root in
// element_at order).
GFContext::Elem subfield_embedding(const GFContext& small, const GFContext& big);

} // namespace dynatomic

#endif
