#include <doctest.h>

#include "dynatomic/deformation.hpp"

using namespace dynatomic;

namespace {

PolyMap q_uni_map(std::initializer_list<const char*> coeffs) {
    QPoly f;
    for (const char* c : coeffs) f.push_back(parse_rational(c));
    qp::trim(f);
    return PolyMap::affine({from_qpoly(f)});
}

// Coefficients of x^i as polynomials in t.
QPoly t_coeff(const Poly& f, long i) {
    for (const auto& [m, c] : f.terms()) {
        if (m.e[0] == i) {
            const RatFunc& r = c.rat_func();
            REQUIRE(r.is_polynomial());
            return r.num;
        }
    }
    return QPoly{};
}

} // namespace

TEST_CASE("deform adds t to every coordinate and specializes back") {
    PolyMap base = q_uni_map({"-3/4", "0", "1"});
    DeformedMap dm = deform(base);
    PolyMap back = specialize_parameter(dm.deformed, Rational(0));
    CHECK(back.coords()[0] == base.coords()[0]);

    // Multivariate: (x^2, y^2) -> (x^2 + t, y^2 + t).
    Field f = Field::Q();
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
    DeformedMap dm2 = deform(PolyMap::affine({x * x, y * y}));
    PolyMap at1 = specialize_parameter(dm2.deformed, Rational(1));
    CHECK(at1.coords()[0] == x * x + Poly::constant(f, 2, FieldElement::of(Rational(1))));
}

TEST_CASE("deformed periodic polynomial matches the worked example") {
    DeformedMap dm = deform(q_uni_map({"-3/4", "0", "1"}));
    // n = 1: x^2 - x - 3/4 + t
    Poly f1 = deformed_periodic_poly(dm, 1);
    CHECK(t_coeff(f1, 0) == QPoly{Rational(-3, 4), Rational(1)});
    CHECK(t_coeff(f1, 1) == QPoly{Rational(-1)});
    CHECK(t_coeff(f1, 2) == QPoly{Rational(1)});
    // n = 2: x^4 + (2t - 3/2)x^2 - x + (t^2 - t/2 - 3/16)
    Poly f2 = deformed_periodic_poly(dm, 2);
    CHECK(t_coeff(f2, 4) == QPoly{Rational(1)});
    CHECK(t_coeff(f2, 3) == QPoly{});
    CHECK(t_coeff(f2, 2) == QPoly{Rational(-3, 2), Rational(2)});
    CHECK(t_coeff(f2, 1) == QPoly{Rational(-1)});
    CHECK(t_coeff(f2, 0) == QPoly{Rational(-3, 16), Rational(-1, 2), Rational(1)});
    // Deform-then-iterate differs from iterating the base and adding t:
    // specializing at t = 0 must recover the undeformed iterate.
    UniEngineQ eng(to_qpoly(dm.base.coords()[0]));
    CHECK(to_qpoly(specialize_parameter(f2, Rational(0))) == eng.periodic(2));
    // z^2 + t at n = 1.
    DeformedMap sq = deform(q_uni_map({"0", "0", "1"}));
    Poly g1 = deformed_periodic_poly(sq, 1);
    CHECK(t_coeff(g1, 0) == QPoly{Rational(0), Rational(1)});
}

TEST_CASE("specialization consistency across maps and levels") {
    for (auto coeffs : {std::initializer_list<const char*>{"-3/4", "0", "1"},
                        std::initializer_list<const char*>{"1", "-2", "0", "1"},
                        std::initializer_list<const char*>{"0", "0", "1"}}) {
        PolyMap base = q_uni_map(coeffs);
        DeformedMap dm = deform(base);
        UniEngineQ eng(to_qpoly(base.coords()[0]));
        for (long n = 1; n <= 4; ++n) {
            Poly ft = deformed_periodic_poly(dm, n);
            CHECK(to_qpoly(specialize_parameter(ft, Rational(0))) == eng.periodic(n));
        }
    }
}

TEST_CASE("degenerate parameter locus of the worked example") {
    DeformedMap dm = deform(q_uni_map({"-3/4", "0", "1"}));
    ParameterLocus l1 = degenerate_parameter_locus(dm, 1);
    CHECK(l1.rational_points == std::vector<Rational>{Rational(1)});
    CHECK(l1.roots_complete);
    CHECK(qp::deg(l1.squarefree_t_poly) == 1);

    ParameterLocus l2 = degenerate_parameter_locus(dm, 2);
    CHECK(l2.rational_points == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(qp::deg(l2.squarefree_t_poly) == 2); // t(t-1): nothing else

    DeformedMap sq = deform(q_uni_map({"0", "0", "1"}));
    ParameterLocus l3 = degenerate_parameter_locus(sq, 1);
    CHECK(l3.rational_points == std::vector<Rational>{Rational(1, 4)});
}

TEST_CASE("thin set: the locus is a nonzero polynomial for sampled families") {
    for (auto coeffs : {std::initializer_list<const char*>{"1", "0", "1"},
                        std::initializer_list<const char*>{"-2", "1", "0", "1"}}) {
        DeformedMap dm = deform(q_uni_map(coeffs));
        for (long n = 1; n <= 3; ++n) {
            ParameterLocus l = degenerate_parameter_locus(dm, n);
            CHECK(!qp::is_zero(l.squarefree_t_poly));
        }
    }
}

TEST_CASE("simplicity at specific parameters from the worked example") {
    DeformedMap dm = deform(q_uni_map({"-3/4", "0", "1"}));
    CHECK(simple_at(dm, 2, Rational(1, 3)));
    CHECK_FALSE(simple_at(dm, 2, Rational(0))); // excluded point
    CHECK_FALSE(simple_at(dm, 1, Rational(1))); // double root at 1/2
    SimplicityCheck sc = generic_simplicity_check(dm, 2, 25, 20260809);
    CHECK(sc.ok);
    CHECK(sc.sampled_t.size() == 25);
}

TEST_CASE("degree conservation (flatness witness)") {
    CHECK(degree_conservation_check(deform(q_uni_map({"-3/4", "0", "1"})), 2));
    CHECK(degree_conservation_check(deform(q_uni_map({"0", "0", "1"})), 3));
    CHECK(degree_conservation_check(deform(q_uni_map({"-3/4", "0", "1"})), 1));
}

TEST_CASE("flat-limit clusters reproduce the worked example") {
    DeformedMap dm = deform(q_uni_map({"-3/4", "0", "1"}));
    std::vector<Rational> tseq;
    Rational t(1, 1000);
    for (int k = 3; k <= 8; ++k) {
        tseq.push_back(t);
        t /= 10;
    }
    ClusterReport rep = flat_limit_clusters(dm, 2, tseq, 30);
    REQUIRE(rep.ok());
    CHECK(rep.conservation_ok);
    CHECK(rep.counts_match);
    CHECK(rep.tags_match);
    CHECK(rep.residual < BigFloat("0.01"));
    REQUIRE(rep.clusters.size() == 2);
    for (const auto& c : rep.clusters) {
        if (c.exact_a == 3) {
            CHECK(c.exact_a_star == 2);
            CHECK(c.reconstructed_a == 3);
            CHECK(c.reconstructed_a_star == 2);
            long fixed_tags = 0, period2_tags = 0;
            for (const auto& m : c.members) {
                if (m.period_tag == 1) ++fixed_tags;
                if (m.period_tag == 2) ++period2_tags;
            }
            CHECK(fixed_tags == 1);
            CHECK(period2_tags == 2);
        } else {
            CHECK(c.exact_a == 1);
            CHECK(c.exact_a_star == 0);
            REQUIRE(c.members.size() == 1);
            CHECK(c.members[0].period_tag == 1);
        }
    }
}

TEST_CASE("flat-limit clusters on an already-simple cycle") {
    DeformedMap dm = deform(q_uni_map({"0", "0", "1"})); // z^2
    std::vector<Rational> tseq{Rational(1, 1000), Rational(1, 10000), Rational(1, 100000)};
    ClusterReport rep = flat_limit_clusters(dm, 2, tseq, 30);
    REQUIRE(rep.ok());
    // z^4 - z has four simple roots; each cluster has one member.
    CHECK(rep.clusters.size() == 4);
    for (const auto& c : rep.clusters) CHECK(c.member_counts.back() == 1);
}

TEST_CASE("flat-limit input validation") {
    DeformedMap dm = deform(q_uni_map({"-3/4", "0", "1"}));
    CHECK_THROWS_AS(flat_limit_clusters(dm, 2, {}, 30), std::invalid_argument);
    // Not strictly decreasing.
    CHECK_THROWS_AS(
        flat_limit_clusters(dm, 2, {Rational(1, 10), Rational(1, 10)}, 30),
        std::invalid_argument);
    // Touches the degenerate locus (t = 1 bad for n = 2... use t=1 first).
    CHECK_THROWS_AS(
        flat_limit_clusters(dm, 2, {Rational(1), Rational(1, 2)}, 30),
        std::invalid_argument);
    // Nonnegativity-by-simplicity: every tagged member contributes 0 or 1.
    std::vector<Rational> tseq{Rational(1, 1000), Rational(1, 10000)};
    ClusterReport rep = flat_limit_clusters(dm, 2, tseq, 30);
    for (const auto& c : rep.clusters) {
        long sum = 0;
        for (const auto& m : c.members) sum += (m.period_tag == 2) ? 1 : 0;
        CHECK(sum == c.reconstructed_a_star);
        CHECK(sum >= 0);
    }
}
