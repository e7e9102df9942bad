#include <doctest.h>

#include "dynatomic/qpoly.hpp"

#include <random>

using namespace dynatomic;

namespace {

QPoly parse(std::initializer_list<const char*> coeffs_low_to_high) {
    QPoly f;
    for (const char* c : coeffs_low_to_high) f.push_back(parse_rational(c));
    qp::trim(f);
    return f;
}

QPoly random_poly(std::mt19937_64& rng, int maxdeg, int maxabs) {
    std::uniform_int_distribution<int> degd(0, maxdeg), cd(-maxabs, maxabs), dend(1, 4);
    QPoly f(degd(rng) + 1);
    for (auto& c : f) c = Rational(cd(rng), dend(rng));
    qp::trim(f);
    return f;
}

} // namespace

TEST_CASE("divrem and exact division") {
    // (z+1/2)^3 (z-3/2) / ((z+1/2)(z-3/2)) = (z+1/2)^2
    QPoly a = parse({"1/2", "1"});
    QPoly b = parse({"-3/2", "1"});
    QPoly num = qp::mul(qp::mul(qp::mul(a, a), a), b);
    QPoly den = qp::mul(a, b);
    QPoly q;
    CHECK(qp::exact_divide(num, den, q));
    CHECK(q == qp::mul(a, a));
    CHECK(q == parse({"1/4", "1", "1"}));

    // z^2 + 1 by z leaves remainder 1
    CHECK_FALSE(qp::exact_divide(parse({"1", "0", "1"}), parse({"0", "1"}), q));

    // (z^4 - z) / (z^2 - z) = z^2 + z + 1 (long-division oracle)
    CHECK(qp::exact_divide(parse({"0", "-1", "0", "0", "1"}), parse({"0", "-1", "1"}), q));
    CHECK(q == parse({"1", "1", "1"}));

    CHECK_THROWS_AS(qp::divrem(a, QPoly{}, q, q), std::domain_error);
}

TEST_CASE("kronecker multiplication matches schoolbook") {
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 60; ++trial) {
        QPoly f = random_poly(rng, 40, 50);
        QPoly g = random_poly(rng, 40, 50);
        CHECK(qp::mul_kronecker(f, g) == qp::mul_schoolbook(f, g));
    }
    // Degenerate shapes.
    CHECK(qp::mul_kronecker(QPoly{}, parse({"1", "2"})).empty());
    CHECK(qp::mul_kronecker(parse({"-7"}), parse({"1/3"})) == parse({"-7/3"}));
}

TEST_CASE("composition is the iterate engine") {
    // (z^2 - 3/4) o (z^2 - 3/4) = z^4 - 3/2 z^2 - 3/16
    QPoly phi = parse({"-3/4", "0", "1"});
    QPoly phi2 = qp::compose(phi, phi);
    CHECK(phi2 == parse({"-3/16", "0", "-3/2", "0", "1"}));
    // z^2 o z^2 o z^2 = z^8
    QPoly sq = parse({"0", "0", "1"});
    CHECK(qp::compose(sq, qp::compose(sq, sq)) == qp::monomial(8, Rational(1)));
}

TEST_CASE("shift is composition with x + c") {
    QPoly phi = parse({"-3/4", "0", "1"});
    // phi(x - 1/2) = x^2 - x - 1/2
    CHECK(qp::shift(phi, Rational(-1, 2)) == parse({"-1/2", "-1", "1"}));
    CHECK(qp::shift(phi, Rational(3, 2)) == parse({"3/2", "3", "1"}));
}

TEST_CASE("order_at counts root multiplicity by synthetic division") {
    QPoly a = parse({"1/2", "1"});
    QPoly b = parse({"-3/2", "1"});
    QPoly f = qp::mul(qp::mul(qp::mul(a, a), a), b);
    CHECK(qp::order_at(f, Rational(-1, 2)) == 3);
    CHECK(qp::order_at(f, Rational(3, 2)) == 1);
    CHECK(qp::order_at(f, Rational(0)) == 0);
    CHECK(qp::order_at(qp::monomial(4, Rational(1)), Rational(0)) == 4);
}

TEST_CASE("gcd: coprime certificate and nontrivial reconstruction") {
    QPoly a = parse({"1/2", "1"});
    QPoly b = parse({"-3/2", "1"});
    CHECK(qp::gcd(a, b) == parse({"1"}));
    QPoly f = qp::mul(qp::pow(a, 3), b);
    QPoly g = qp::mul(qp::pow(a, 2), parse({"7", "1"}));
    CHECK(qp::gcd(f, g) == qp::pow(a, 2));
    CHECK(qp::gcd(QPoly{}, f) == qp::make_monic(f));

    // Random products share the planted factor.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        QPoly h = random_poly(rng, 6, 8);
        if (qp::deg(h) < 1) continue;
        QPoly u = random_poly(rng, 5, 8), v = random_poly(rng, 5, 8);
        if (u.empty() || v.empty()) continue;
        QPoly gg = qp::gcd(qp::mul(h, u), qp::mul(h, v));
        QPoly q;
        CHECK(qp::exact_divide(gg, qp::make_monic(h), q)); // gcd contains h
    }
}

TEST_CASE("squarefree decomposition (Yun)") {
    QPoly a = parse({"1/2", "1"});
    QPoly b = parse({"-3/2", "1"});
    QPoly f = qp::mul(qp::pow(a, 3), b);
    auto blocks = qp::squarefree_decomposition(f);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].first == b);
    CHECK(blocks[0].second == 1);
    CHECK(blocks[1].first == a);
    CHECK(blocks[1].second == 3);

    auto single = qp::squarefree_decomposition(parse({"-3/4", "-1", "1"}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].second == 1);

    auto z4 = qp::squarefree_decomposition(qp::monomial(4, Rational(1)));
    REQUIRE(z4.size() == 1);
    CHECK(z4[0].first == parse({"0", "1"}));
    CHECK(z4[0].second == 4);

    CHECK_THROWS_AS(qp::squarefree_decomposition(QPoly{}), std::domain_error);

    // Reconstruction property: lc * prod blocks^mult == f.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        QPoly u = random_poly(rng, 4, 6), v = random_poly(rng, 3, 6);
        if (qp::deg(u) < 1 || qp::deg(v) < 1) continue;
        QPoly f2 = qp::mul(qp::mul(qp::pow(u, 2), v), parse({"3"}));
        auto bl = qp::squarefree_decomposition(f2);
        QPoly rec = qp::constant(qp::lc(f2));
        for (auto& [blk, m] : bl) rec = qp::mul(rec, qp::pow(blk, m));
        CHECK(rec == f2);
    }
}

TEST_CASE("exact_divide(f*g, g) recovers f") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly f = random_poly(rng, 8, 10);
        QPoly g = random_poly(rng, 8, 10);
        if (g.empty()) continue;
        QPoly q;
        CHECK(qp::exact_divide(qp::mul(f, g), g, q));
        CHECK(q == f);
    }
}

TEST_CASE("resultant and discriminant") {
    // disc(x^2 - x + t0) = 1 - 4 t0 at rational t0
    for (int num = -3; num <= 3; ++num) {
        QPoly f = parse({"0", "-1", "1"});
        f[0] = Rational(num, 2);
        CHECK(qp::discriminant(f) == Rational(1) - Rational(4) * Rational(num, 2));
    }
    // res(x-2, x-5) = g(2) = -3
    QPoly f = parse({"-2", "1"});
    QPoly g = parse({"-5", "1"});
    CHECK(qp::resultant(f, g) == Rational(-3));
    // Common root makes it vanish.
    CHECK(qp::resultant(qp::mul(f, g), f) == 0);
}

TEST_CASE("rational roots") {
    QPoly f = qp::mul(qp::mul(parse({"1/2", "1"}), parse({"1/2", "1"})), parse({"-3", "2"}));
    auto roots = qp::rational_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::make_pair(Rational(-1, 2), 2L));
    CHECK(roots[1] == std::make_pair(Rational(3, 2), 1L));
    auto tt = qp::rational_roots(parse({"0", "0", "-1", "1"})); // t^2(t-1)
    REQUIRE(tt.size() == 2);
    CHECK(tt[0] == std::make_pair(Rational(0), 2L));
    CHECK(tt[1] == std::make_pair(Rational(1), 1L));
}

TEST_CASE("canonical printing") {
    CHECK(qp::to_string(parse({"-3/16", "-1", "-3/2", "0", "1"}), "z") ==
          "z^4 - 3/2*z^2 - z - 3/16");
    CHECK(qp::to_string(QPoly{}, "z") == "0");
    CHECK(qp::to_string(parse({"1/4", "1", "1"}), "z") == "z^2 + z + 1/4");
}
