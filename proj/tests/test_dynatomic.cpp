#include <doctest.h>

#include "dynatomic/dynatomic.hpp"

#include <random>

using namespace dynatomic;

namespace {

QPoly qparse(std::initializer_list<const char*> coeffs) {
    QPoly f;
    for (const char* c : coeffs) f.push_back(parse_rational(c));
    qp::trim(f);
    return f;
}

PolyMap uni_map(const QPoly& phi) { return PolyMap::affine({from_qpoly(phi)}); }

const QPoly kPaperMap = qparse({"-3/4", "0", "1"}); // z^2 - 3/4

} // namespace

TEST_CASE("periodic polynomials of the running example") {
    UniEngineQ eng(kPaperMap);
    CHECK(eng.periodic(1) == qparse({"-3/4", "-1", "1"}));
    // (z+1/2)^3 (z-3/2) expanded
    CHECK(eng.periodic(2) == qparse({"-3/16", "-1", "-3/2", "0", "1"}));
    UniEngineQ sq(qparse({"0", "0", "1"}));
    CHECK(sq.periodic(2) == qparse({"0", "-1", "0", "0", "1"}));
}

TEST_CASE("degeneracy is detected and named") {
    // The identity map degenerates immediately.
    UniEngineQ ident(qparse({"0", "1"}));
    CHECK_THROWS_AS(ident.periodic(1), DegeneracyError);
    // phi(z) = -z is fine at n = 1 but phi^2 = id.
    UniEngineQ neg(qparse({"0", "-1"}));
    CHECK(neg.periodic(1) == qparse({"0", "-2"}));
    CHECK_THROWS_AS(neg.periodic(2), DegeneracyError);
    CHECK_THROWS_AS(neg.dynatomic(2), DegeneracyError);
}

TEST_CASE("dynatomic polynomials: paper example and monomial map") {
    UniEngineQ eng(kPaperMap);
    auto d2 = eng.dynatomic(2);
    CHECK(d2.certificate);
    CHECK(d2.value == qparse({"1/4", "1", "1"})); // (z+1/2)^2
    auto d1 = eng.dynatomic(1);
    CHECK(d1.certificate);
    CHECK(d1.value == eng.periodic(1));

    UniEngineQ sq(qparse({"0", "0", "1"}));
    auto s2 = sq.dynatomic(2);
    CHECK(s2.certificate);
    CHECK(s2.value == qparse({"1", "1", "1"}));
}

TEST_CASE("multiplicities of the paper example") {
    UniEngineQ eng(kPaperMap);
    CHECK(eng.mult_at(1, Rational(-1, 2)) == 1);
    CHECK(eng.mult_at(1, Rational(3, 2)) == 1);
    CHECK(eng.mult_at(2, Rational(-1, 2)) == 3);
    CHECK(eng.mult_at(2, Rational(3, 2)) == 1);
    CHECK(eng.mult_at(1, Rational(0)) == 0);
    CHECK(eng.formal_mult_at(2, Rational(-1, 2)) == 2);
    CHECK(eng.formal_mult_at(2, Rational(3, 2)) == 0);
    CHECK(eng.formal_mult_at(1, Rational(-1, 2)) == 1);
}

TEST_CASE("nonperiodic points have vanishing formal multiplicity") {
    UniEngineQ eng(qparse({"1", "1", "1"})); // z^2 + z + 1
    for (long n = 1; n <= 6; ++n) {
        CHECK(eng.formal_mult_at(n, Rational(7, 3)) == 0);
    }
}

TEST_CASE("degree bookkeeping") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int deg : {2, 3, 4}) {
        QPoly phi(static_cast<size_t>(deg + 1), Rational(0));
        phi[static_cast<size_t>(deg)] = 1;
        for (int i = 0; i < deg; ++i) phi[static_cast<size_t>(i)] = Rational(coef(rng));
        UniEngineQ eng(phi);
        long kn = 1;
        for (long n = 1; n <= 4; ++n) {
            kn *= deg;
            CHECK(qp::deg(eng.periodic(n)) == kn);
            long expect = 0;
            long kd = 1;
            for (auto d : divisors(n).divisors) {
                // deg Phi*_n = sum mu(n/d) k^d
                kd = 1;
                for (long i = 0; i < d; ++i) kd *= deg;
                expect += mobius(n / d) * kd;
            }
            auto dyn = eng.dynatomic(n);
            CHECK(dyn.certificate);
            CHECK(qp::deg(dyn.value) == expect);
        }
    }
}

TEST_CASE("mobius product identity on random maps") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coef(-4, 4), degd(2, 3);
    for (int trial = 0; trial < 8; ++trial) {
        int deg = degd(rng);
        QPoly phi(static_cast<size_t>(deg + 1), Rational(0));
        phi[static_cast<size_t>(deg)] = 1;
        for (int i = 0; i < deg; ++i) phi[static_cast<size_t>(i)] = Rational(coef(rng));
        UniEngineQ eng(phi);
        for (long n : {4L, 6L}) {
            QPoly prod{Rational(1)};
            for (auto d : divisors(n).divisors) {
                auto dyn = eng.dynatomic(d);
                REQUIRE(dyn.certificate);
                prod = qp::mul(prod, dyn.value);
            }
            CHECK(qp::make_monic(prod) == qp::make_monic(eng.periodic(n)));
        }
    }
}

TEST_CASE("orbit cells of the paper example") {
    UniEngineQ eng(kPaperMap);
    auto cells = eng.cells({1, 2});
    REQUIRE(cells.size() == 2);
    // Both cells are fixed points; there are no minimal-period-2 points.
    for (const auto& c : cells) CHECK(c.minimal_period == 1);
    // Identify by factor.
    const OrbitCell* neg_half = nullptr;
    const OrbitCell* three_half = nullptr;
    for (const auto& c : cells) {
        if (c.factor == qparse({"1/2", "1"})) neg_half = &c;
        if (c.factor == qparse({"-3/2", "1"})) three_half = &c;
    }
    REQUIRE(neg_half);
    REQUIRE(three_half);
    CHECK(neg_half->a.at(1) == 1);
    CHECK(neg_half->a.at(2) == 3);
    CHECK(neg_half->a_star(2) == 2);
    CHECK(three_half->a.at(1) == 1);
    CHECK(three_half->a.at(2) == 1);
    CHECK(three_half->a_star(2) == 0);
}

TEST_CASE("orbit cells: z^2 has a genuine period-2 orbit") {
    UniEngineQ eng(qparse({"0", "0", "1"}));
    auto cells = eng.cells({1, 2});
    bool found_period2 = false;
    for (const auto& c : cells) {
        if (c.minimal_period == 2) {
            found_period2 = true;
            CHECK(c.factor == qparse({"1", "1", "1"})); // primitive cube roots of unity
            CHECK(c.a_star(2) == 1);
        }
    }
    CHECK(found_period2);
}

TEST_CASE("cells demand a divisor-closed level set") {
    UniEngineQ eng(kPaperMap);
    CHECK_THROWS_AS(eng.cells({2}), std::invalid_argument);
    CHECK_THROWS_AS(eng.cells({1, 6}), std::invalid_argument);
}

TEST_CASE("cell tables are consistent with direct multiplicities at rational points") {
    // phi = z^2 + z - 1 has a parabolic fixed point at -1 (multiplier -1),
    // so f_2 is non-squarefree and the refinement path is exercised.
    UniEngineQ eng(qparse({"-1", "1", "1"}));
    auto cells = eng.cells({1, 2, 3, 4, 5, 6});
    bool saw_parabolic = false;
    for (const auto& c : cells) {
        if (qp::deg(c.factor) != 1) continue;
        Rational P = -c.factor[0];
        for (long d = 1; d <= 6; ++d) {
            CHECK(c.a.at(d) == eng.mult_at(d, P));
        }
        if (c.a.at(2) == 3) saw_parabolic = true;
    }
    CHECK(saw_parabolic);
    // Every cell stays effective.
    for (const auto& c : cells) {
        for (long nn = 1; nn <= 6; ++nn) CHECK(c.a_star(nn) >= 0);
    }
}

TEST_CASE("finite-field engine: dynatomic certificate and extension multiplicities") {
    auto F5 = GFContext::make(5, 1);
    auto mk = [&](std::initializer_list<int> cs) {
        std::vector<GFContext::Elem> v;
        for (int c : cs) v.push_back(F5->from_int(c));
        return gfp::from_coeffs(F5, v);
    };
    UniEngineGF eng(mk({0, 0, 1})); // z^2 over F_5
    auto d2 = eng.dynatomic(2);
    CHECK(d2.certificate);
    CHECK(gfp::equal(d2.value, mk({1, 1, 1})));
    // The cube roots of unity in F_25 have multiplicity 1 at level 2.
    auto F25 = eng.extension(2);
    long found = 0;
    for (zp::u64 i = 0; i < F25->size(); ++i) {
        auto x = F25->element_at(i);
        GFPoly lifted = gfp::lift(mk({1, 1, 1}), F25);
        if (F25->is_zero(gfp::eval(lifted, x))) {
            ++found;
            CHECK(eng.mult_at(2, x, 2) == 1);
            CHECK(eng.formal_mult_at(2, x, 2) == 1);
        }
    }
    CHECK(found == 2);
}

TEST_CASE("P^1 engine: polynomial maps have a simple fixed point at infinity") {
    Field f = Field::Q();
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
    // Homogenization of z^2 - 3/4: [x^2 - 3/4 y^2 : y^2]
    Poly F = x * x - (y * y).scale(FieldElement::of(Rational(3, 4)));
    ProjEngine eng(PolyMap::projective(F, y * y));
    for (long n = 1; n <= 3; ++n) {
        CHECK(eng.infinity_mult(n) == 1);
    }
    CHECK(eng.formal_infinity_mult(2) == 0);
    // The affine chart agrees with the affine engine.
    UniEngineQ affine(kPaperMap);
    for (long n = 1; n <= 3; ++n) {
        CHECK(to_qpoly(eng.affine_periodic(n)) == affine.periodic(n));
    }
    auto dyn = eng.dynatomic(2);
    CHECK(dyn.certificate);
    CHECK(to_qpoly(dyn.value) == qparse({"1/4", "1", "1"}));
}

TEST_CASE("P^1 engine: conservation over the closure") {
    // deg H_n = k^n + 1 splits as affine degree + infinity multiplicity.
    Field f = Field::Q();
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
    ProjEngine eng(PolyMap::projective(x * x, y * y));
    for (long n = 1; n <= 4; ++n) {
        long kn = 1;
        for (long i = 0; i < n; ++i) kn *= 2;
        Poly h = eng.affine_periodic(n);
        CHECK(h.total_degree() + eng.infinity_mult(n) == kn + 1);
    }
    // [y^2 : x^2] swaps 0 and infinity: infinity is 2-periodic, not fixed.
    ProjEngine swap2(PolyMap::projective(y * y, x * x));
    CHECK(swap2.infinity_mult(1) == 0);
    CHECK(swap2.infinity_mult(2) >= 1);
}

TEST_CASE("spec-level free functions") {
    PolyMap map = uni_map(kPaperMap);
    CHECK(to_qpoly(periodic_poly(map, 2)) == qparse({"-3/16", "-1", "-3/2", "0", "1"}));
    DynatomicResult r = dynatomic_poly(map, 2);
    CHECK(r.division_certificate);
    CHECK(to_qpoly(r.dynatomic) == qparse({"1/4", "1", "1"}));
    CHECK(multiplicity_at(map, 2, Rational(-1, 2)) == 3);
    CHECK(formal_multiplicity_at(map, 2, Rational(-1, 2)) == 2);
}
