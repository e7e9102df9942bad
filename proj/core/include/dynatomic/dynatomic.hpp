#ifndef DYNATOMIC_DYNATOMIC_HPP
#define DYNATOMIC_DYNATOMIC_HPP

// Univariate engine: periodic-point polynomials phi^n(z) - z, dynatomic
// polynomials via the Mobius product
//
//     Phi*_n = prod_{d | n} (phi^d(z) - z)^{mu(n/d)},
//
// computed as one numerator/denominator split with an exact-division
// certificate, and per-point multiplicities. Supports affine polynomial maps
// over Q and F_{p^k}, and morphisms of P^1 as homogeneous pairs (the affine
// chart plus the point at infinity via the chart swap).

#include "dynatomic/errors.hpp"
#include "dynatomic/mobius.hpp"
#include "dynatomic/polymap.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dynatomic {

struct DynatomicResult {
    long n = 0;
    Poly phi_n_minus_z;       // phi^n(z) - z (the affine chart for P^1 maps)
    Poly dynatomic;           // Phi*_n exactly as the division produced it
    bool division_certificate = false;
};

// --- engine over Q ---------------------------------------------------------

// A Galois orbit (or a union of orbits sharing one multiplicity profile):
// a monic squarefree factor together with the shared table a_P(d). Cells for
// one level set are pairwise coprime and their roots partition the periodic
// points of that level set.
struct OrbitCell {
    QPoly factor;
    long minimal_period = 0;
    std::map<long, long> a; // level -> a_P(d) for every requested level

    long a_star(long n) const; // sum_{d | n} mu(n/d) a[d]; all d | n must be present
};

class UniEngineQ {
public:
    explicit UniEngineQ(QPoly phi); // degree >= 1

    const QPoly& map_poly() const { return phi_; }
    long map_degree() const { return qp::deg(phi_); }

    const QPoly& iterate_poly(long n);       // phi^n(z)
    QPoly periodic(long n);                  // phi^n(z) - z; DegeneracyError if identically 0

    struct Dyn {
        QPoly value;
        bool certificate = false;
    };
    Dyn dynatomic(long n);

    long mult_at(long n, const Rational& P);         // a_P(n), order of vanishing
    long formal_mult_at(long n, const Rational& P);  // a*_P(n)

    // Orbit cells for a divisor-closed set of levels (e.g. divisors(n) or
    // {1..6}); every cell carries a_P(d) for each requested level.
    std::vector<OrbitCell> cells(const std::vector<long>& levels);

    const std::vector<std::pair<QPoly, long>>& squarefree_blocks(long n);

private:
    QPoly phi_;
    std::map<long, QPoly> iter_;
    std::map<long, std::vector<std::pair<QPoly, long>>> sqf_;
};

// --- engine over F_{p^k} ----------------------------------------------------

class UniEngineGF {
public:
    explicit UniEngineGF(GFPoly phi);

    const GFPtr& base_field() const { return phi_.F; }
    const GFPoly& map_poly() const { return phi_; }

    const GFPoly& iterate_poly(long n);
    GFPoly periodic(long n); // DegeneracyError if identically 0

    struct Dyn {
        GFPoly value;
        bool certificate = false;
    };
    Dyn dynatomic(long n);

    // phi^n(z) - z lifted into the degree-j extension of the base field.
    const GFPoly& periodic_lifted(long n, int j);
    // a_P(n) for P with coordinates in the degree-j extension.
    long mult_at(long n, const GFContext::Elem& P, int j);
    long formal_mult_at(long n, const GFContext::Elem& P, int j);

private:
    GFPoly phi_;
    std::map<long, GFPoly> iter_;
    std::map<std::pair<long, int>, GFPoly> lifted_;
    std::map<int, GFPtr> ext_;

public:
    const GFPtr& extension(int j);
};

// --- P^1 engine -------------------------------------------------------------

// Iterates the homogeneous pair [F_n : G_n] and studies the periodic form
// H_n = y F_n - x G_n. Finite points live on the affine chart z = x/y; the
// point at infinity [1:0] is handled on the swapped chart w = y/x, where its
// multiplicity is ord_{w=0} H_n(1, w).
class ProjEngine {
public:
    explicit ProjEngine(PolyMap map); // projective model

    const PolyMap& map() const { return map_; }
    const std::pair<Poly, Poly>& iterate_pair(long n);
    Poly periodic_form(long n);         // H_n, bivariate homogeneous; DegeneracyError if 0
    Poly affine_periodic(long n);       // H_n(z, 1) as a univariate Poly
    long infinity_mult(long n);         // ord_{w=0} H_n(1, w)
    long formal_infinity_mult(long n);

    struct Dyn {
        Poly value;                     // affine-chart quotient
        bool certificate = false;       // affine division exact AND a*_inf >= 0
        long infinity_formal_mult = 0;
    };
    Dyn dynatomic(long n);

private:
    PolyMap map_;
    std::map<long, std::pair<Poly, Poly>> iter_;
};

// --- spec-level operations on PolyMap ----------------------------------------

// Univariate affine maps over Q or F_q; projective maps use their affine
// chart (the point at infinity is reported by infinity_multiplicity).
Poly periodic_poly(const PolyMap& map, long n);
DynatomicResult dynatomic_poly(const PolyMap& map, long n);
long multiplicity_at(const PolyMap& map, long n, const Rational& P);
long formal_multiplicity_at(const PolyMap& map, long n, const Rational& P);
long infinity_multiplicity(const PolyMap& map, long n); // projective model only

} // namespace dynatomic

#endif
