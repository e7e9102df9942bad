#ifndef DYNATOMIC_LOCAL_MULT_HPP
#define DYNATOMIC_LOCAL_MULT_HPP

// Local intersection multiplicity a_P(n) = dim_K R_P/(I_Delta + I_Gamma_n)
// as the colength of the zero-dimensional ideal generated by the shifted
// system f_i(x) = phi_i^n(x + P) - x_i - P_i. The diagonal substitution
// y = x is already built into that system, halving the variable count.
//
// Colength is computed by certified truncation: d(D) = dim K[x]/((f) + m^D)
// is nondecreasing in D, and d(D+1) = d(D) certifies m^D ⊆ (f) (Nakayama),
// so d(D) is the true colength. Exceeding the caller's bound yields an
// Inconclusive verdict instead of looping on a possibly degenerate system.

#include "dynatomic/polymap.hpp"

#include <vector>

namespace dynatomic {

struct LocalSystem {
    int dimension = 0;           // b
    std::vector<Poly> generators; // b polynomials vanishing at the origin
};

struct ColengthReport {
    enum class Status { Finite, Degenerate, Inconclusive };
    Status status = Status::Inconclusive;
    long value = -1;               // >= 0 when Finite
    long certified_at_degree = 0;  // first D with d(D) = d(D+1)
    long bound_used = 0;
    long reached_degree = 0;       // diagnostics for Inconclusive

    bool finite() const { return status == Status::Finite; }
};

// Requires phi^n(P) = P exactly (callers screen nonperiodic points upstream).
LocalSystem local_system(const PolyMap& map, long n, const std::vector<FieldElement>& P);

ColengthReport colength(const LocalSystem& system, long bound);

// dim_K K[x]/((f) + m^D); exposed for the over-certification checks.
long truncated_quotient_dim(const LocalSystem& system, long degree);

// a_P(n): 0 when phi^n(P) != P, otherwise the colength of the local system
// (bound defaults to the Bezout number of the shifted generators).
ColengthReport intersection_multiplicity(const PolyMap& map, long n,
                                         const std::vector<FieldElement>& P,
                                         long bound = 0);

// a*_P(n) = sum_{d | n} mu(n/d) a_P(d); Degenerate/Inconclusive propagate.
ColengthReport formal_intersection_multiplicity(const PolyMap& map, long n,
                                                const std::vector<FieldElement>& P,
                                                long bound = 0);

// Minimal period m | n of P under the map, with the reduced iterate count
// n/m. Throws std::domain_error if P does not return within n steps or if
// its minimal period does not divide n.
std::pair<long, long> period_reduction(const PolyMap& map, long n,
                                       const std::vector<FieldElement>& P);

// One application of the map to a point.
std::vector<FieldElement> apply_map(const PolyMap& map, const std::vector<FieldElement>& P);

} // namespace dynatomic

#endif
