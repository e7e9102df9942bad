#ifndef DYNATOMIC_CYCLES_HPP
#define DYNATOMIC_CYCLES_HPP

// Global zero-cycles Phi_n and Phi*_n. Over F_q the support is found by
// exhaustive enumeration of extension fields up to a degree cap, each point
// keyed by its coordinates in the minimal field of definition (deterministic
// moduli make the keys canonical). Over Q, univariate support is reported at
// the Galois-orbit level: monic squarefree factors from the gcd tower, with
// rational points split off when the root search is feasible.

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/local_mult.hpp"

#include <map>
#include <string>
#include <vector>

namespace dynatomic {

struct AlgebraicPoint {
    enum class Kind { Rational, Orbit, Finite, Infinity };
    Kind kind = Kind::Rational;
    std::vector<Rational> rational_coords;            // Kind::Rational
    QPoly orbit_factor;                               // Kind::Orbit (monic squarefree)
    int ext_degree = 1;                               // Kind::Finite
    std::vector<GFContext::Elem> gf_coords;           // Kind::Finite

    static AlgebraicPoint rational(std::vector<Rational> coords);
    static AlgebraicPoint orbit(QPoly factor);
    static AlgebraicPoint finite_field(int ext_degree, std::vector<GFContext::Elem> coords);
    static AlgebraicPoint infinity();

    long orbit_size() const; // conjugate count represented by this key
    bool operator<(const AlgebraicPoint& o) const;
    bool operator==(const AlgebraicPoint& o) const;
    std::string to_string() const;
};

struct ZeroCycle {
    std::string field;   // coefficient field name
    std::string ambient; // "A^1", "A^2", "P^1"
    int ext_cap = 0;     // extension-degree cap used for enumeration (0: exact/Q)
    std::map<AlgebraicPoint, long> entries; // nonzero multiplicities only

    void add(const AlgebraicPoint& p, long mult);
    // this += scalar * other (ambient descriptors must agree)
    ZeroCycle& accumulate(const ZeroCycle& other, long scalar);
    long total() const; // sum of mult * orbit_size
    bool operator==(const ZeroCycle& o) const { return entries == o.entries; }
};

struct EffectivityReport {
    bool effective = true;
    std::vector<std::pair<AlgebraicPoint, long>> violations;
    long total = 0;
};

EffectivityReport verify_effectivity(const ZeroCycle& cycle);

// --- enumeration over F_q ----------------------------------------------------

struct PeriodicPoint {
    int ext_degree = 1;                       // minimal field of definition
    std::vector<GFContext::Elem> coords;      // affine coords, or the chart
    bool at_infinity = false;                 // P^1 maps only
    long minimal_period = 0;
};

// All P in A^b(F_{q^j}), j <= k_max, with phi^n(P) = P, tagged with exact
// minimal periods and listed once, in their minimal field of definition.
// For projective maps the P^1 point at infinity is included.
std::vector<PeriodicPoint> enumerate_periodic(const PolyMap& map, long n, int k_max);

// Phi_n over F_q up to the extension cap. Univariate multiplicities are root
// orders of phi^n(z) - z; multivariate ones come from the colength engine.
// Throws DegeneracyError when phi^n is degenerate (identically fixed locus
// or an Inconclusive colength at the Bezout bound).
ZeroCycle build_cycle(const PolyMap& map, long n, int k_max);
ZeroCycle build_dynatomic_cycle(const PolyMap& map, long n, int k_max);

// --- cycles over Q (univariate) ------------------------------------------------

ZeroCycle build_cycle(const PolyMap& map, long n);           // univariate over Q
ZeroCycle build_dynatomic_cycle(const PolyMap& map, long n); // univariate over Q

// Multivariate over Q: support detection is restricted to caller-supplied
// candidate points.
ZeroCycle build_cycle(const PolyMap& map, long n,
                      const std::vector<std::vector<Rational>>& candidates);
ZeroCycle build_dynatomic_cycle(const PolyMap& map, long n,
                                const std::vector<std::vector<Rational>>& candidates);

} // namespace dynatomic

#endif
