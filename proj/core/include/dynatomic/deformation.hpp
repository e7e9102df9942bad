#ifndef DYNATOMIC_DEFORMATION_HPP
#define DYNATOMIC_DEFORMATION_HPP

// The additive deformation phi(x, t) = [phi_1(x) + t, ..., phi_b(x) + t] and
// its verification machinery: the degenerate parameter locus (discriminant in
// t), generic-simplicity sampling, the exact degree-conservation witness for
// flatness, and the numeric flat-limit protocol that reassembles a_P(n) and
// a*_P(n) from cluster member counts and period tags as t -> 0.

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/roots.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dynatomic {

struct DeformedMap {
    PolyMap base;     // affine over Q
    PolyMap deformed; // over Q(t); specializing t = 0 recovers base exactly
};

DeformedMap deform(const PolyMap& map);

// (phi(.,t))^n(x) - x with exact t-polynomial coefficients. Deform first,
// then iterate: the iterates are of phi(.,t), never deformations of phi^n.
Poly deformed_periodic_poly(const DeformedMap& dmap, long n); // univariate only

struct ParameterLocus {
    QPoly squarefree_t_poly;               // monic squarefree polynomial in t
    std::vector<Rational> rational_points; // its rational roots
    bool roots_complete = true;            // false if root enumeration was infeasible
};

// Squarefree part of the t-discriminant of phi^n(x,t) - x with respect to x.
// Outside its roots every period-n point of the specialized map is simple.
// Throws DegeneracyError if the discriminant vanishes identically.
ParameterLocus degenerate_parameter_locus(const DeformedMap& dmap, long n);

// Is phi^n(x, t0) - x squarefree of full degree?
bool simple_at(const DeformedMap& dmap, long n, const Rational& t0);

struct SimplicityCheck {
    bool ok = true;
    std::vector<Rational> sampled_t;
    std::vector<Rational> counterexamples;
};

// Samples random t0 (numerator/denominator uniform in [1, 1000], sign
// uniform), rejecting draws on the degenerate locus; 100 consecutive
// rejections abort with std::runtime_error.
SimplicityCheck generic_simplicity_check(const DeformedMap& dmap, long n, long samples,
                                         std::uint64_t seed);

// Leading x-coefficient of phi^n(x,t) - x is a nonzero t-free constant, so
// every specialization has the same degree: the observable flatness witness.
bool degree_conservation_check(const DeformedMap& dmap, long n);

struct ClusterMember {
    Complex position;
    long period_tag = 0; // minimal d | n passing the orbit-return tolerance
};

struct Cluster {
    Complex center;
    QPoly cell_factor;    // exact orbit cell the center is a root of
    long exact_a = 0;     // a_P(n) from the exact engine
    long exact_a_star = 0;
    std::vector<long> member_counts; // one per t_k
    std::vector<ClusterMember> members; // at the smallest t_k
    long reconstructed_a = 0;
    long reconstructed_a_star = 0;
};

struct ClusterReport {
    enum class Status { Ok, Inconclusive };
    Status status = Status::Inconclusive;
    std::string diagnostic;
    std::vector<Rational> t_sequence;
    std::vector<Cluster> clusters;
    BigFloat residual{0};       // max member-to-center distance at smallest t_k
    bool conservation_ok = false; // sum of member counts == deg at every t_k
    bool counts_match = false;    // member count == a_P(n) for every cluster
    bool tags_match = false;      // period-n tag count == a*_P(n) for every cluster

    bool ok() const { return status == Status::Ok; }
};

// The numeric flat-limit protocol. Roots of phi^n(x, t_k) - x are assigned
// to the nearest undeformed support point within c * |t_k|^(1/M), M = a_P(n),
// c = half the minimal pairwise distance of support points.
ClusterReport flat_limit_clusters(const DeformedMap& dmap, long n,
                                  const std::vector<Rational>& t_sequence, int precision);

} // namespace dynatomic

#endif
