#include <doctest.h>

#include "dynatomic/finite_field.hpp"
#include "dynatomic/gfpoly.hpp"

using namespace dynatomic;

TEST_CASE("deterministic irreducible moduli") {
    // First irreducible in (a_0, a_1, ...) order.
    CHECK(GFContext::make(2, 2)->modulus() == zp::Poly{1, 1, 1}); // u^2+u+1
    CHECK(GFContext::make(3, 2)->modulus() == zp::Poly{1, 0, 1}); // u^2+1
    CHECK(GFContext::make(5, 3)->modulus() == zp::Poly{1, 1, 0, 1}); // u^3+u+1
    CHECK(GFContext::make(7, 1)->modulus() == zp::Poly{0, 1});
    CHECK_THROWS_AS(GFContext::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GFContext::make(5, 0), std::invalid_argument);
}

TEST_CASE("field arithmetic in F_25") {
    auto F = GFContext::make(5, 2);
    CHECK(F->size() == 25);
    // Every nonzero element has an inverse and x * x^-1 = 1.
    int nonzero = 0;
    for (zp::u64 i = 1; i < F->size(); ++i) {
        auto x = F->element_at(i);
        if (F->is_zero(x)) continue;
        ++nonzero;
        CHECK(F->mul(x, F->inv(x)) == F->one());
        // Multiplicative order divides 24.
        CHECK(F->pow(x, 24) == F->one());
    }
    CHECK(nonzero == 24);
    CHECK_THROWS_AS(F->inv(F->zero()), std::domain_error);
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
    auto F = GFContext::make(3, 4);
    long fixed = 0;
    for (zp::u64 i = 0; i < F->size(); ++i) {
        auto x = F->element_at(i);
        if (F->frobenius(x, 1) == x) ++fixed;
    }
    CHECK(fixed == 3);
    // Degrees partition: counts of elements with minimal degree d, d | 4.
    long d1 = 0, d2 = 0, d4 = 0;
    for (zp::u64 i = 0; i < F->size(); ++i) {
        switch (F->minimal_degree(F->element_at(i))) {
            case 1: ++d1; break;
            case 2: ++d2; break;
            case 4: ++d4; break;
            default: FAIL("unexpected degree");
        }
    }
    CHECK(d1 == 3);
    CHECK(d2 == 6);   // |F_9| - |F_3|
    CHECK(d4 == 72);  // 81 - 9
}

TEST_CASE("rational embedding and poles") {
    auto F = GFContext::make(5, 1);
    CHECK(F->from_rational(Rational(-3, 4)) == F->from_int(3)); // -3 * inv(4) = 2*4 = 8 = 3 mod 5
    CHECK_THROWS_AS(F->from_rational(Rational(1, 5)), std::domain_error);
}

TEST_CASE("gf polynomial division, gcd, root order") {
    auto F = GFContext::make(5, 1);
    auto mk = [&](std::initializer_list<int> cs) {
        std::vector<GFContext::Elem> v;
        for (int c : cs) v.push_back(F->from_int(c));
        return gfp::from_coeffs(F, v);
    };
    // (x-1)^2 (x-2) over F_5
    GFPoly a = mk({-1, 1});
    GFPoly f = gfp::mul(gfp::mul(a, a), mk({-2, 1}));
    CHECK(gfp::order_at(f, F->from_int(1)) == 2);
    CHECK(gfp::order_at(f, F->from_int(2)) == 1);
    CHECK(gfp::order_at(f, F->from_int(3)) == 0);
    CHECK(gfp::gcd(f, gfp::derivative(f)).degree() == 1);
}

TEST_CASE("char-p squarefree decomposition with wild part") {
    auto F = GFContext::make(5, 1);
    auto mk = [&](std::initializer_list<int> cs) {
        std::vector<GFContext::Elem> v;
        for (int c : cs) v.push_back(F->from_int(c));
        return gfp::from_coeffs(F, v);
    };
    // (x-1)^5 (x-2): derivative kills the wild factor.
    GFPoly f = gfp::mul(gfp::pow(mk({-1, 1}), 5), mk({-2, 1}));
    auto blocks = gfp::squarefree_decomposition(f);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].second == 1);
    CHECK(gfp::equal(blocks[0].first, mk({-2, 1})));
    CHECK(blocks[1].second == 5);
    CHECK(gfp::equal(blocks[1].first, mk({-1, 1})));

    // Pure p-th power.
    auto p5 = gfp::squarefree_decomposition(gfp::pow(mk({1, 1}), 5));
    REQUIRE(p5.size() == 1);
    CHECK(p5[0].second == 5);

    // Reconstruction.
    GFPoly rec = gfp::constant(F, F->one());
    for (auto& [b, m] : blocks) rec = gfp::mul(rec, gfp::pow(b, m));
    CHECK(gfp::equal(rec, gfp::make_monic(f)));
}

TEST_CASE("frobenius root counting in extensions") {
    auto F = GFContext::make(5, 1);
    auto mk = [&](std::initializer_list<int> cs) {
        std::vector<GFContext::Elem> v;
        for (int c : cs) v.push_back(F->from_int(c));
        return gfp::from_coeffs(F, v);
    };
    // x^2 + x + 1: the primitive cube roots of unity live in F_25, not F_5.
    GFPoly f = mk({1, 1, 1});
    CHECK(gfp::count_roots_in_extension(f, 1) == 0);
    CHECK(gfp::count_roots_in_extension(f, 2) == 2);
    // x^3 - x splits over F_5.
    CHECK(gfp::count_roots_in_extension(mk({0, -1, 0, 1}), 1) == 3);
}

TEST_CASE("subfield embedding and lift") {
    auto F5 = GFContext::make(5, 1);
    auto F25 = GFContext::make(5, 2);
    auto mk = [&](std::initializer_list<int> cs) {
        std::vector<GFContext::Elem> v;
        for (int c : cs) v.push_back(F5->from_int(c));
        return gfp::from_coeffs(F5, v);
    };
    GFPoly f = mk({1, 1, 1}); // irreducible over F_5
    GFPoly lifted = gfp::lift(f, F25);
    // Over F_25 it must factor: it has two roots there.
    long roots = 0;
    for (zp::u64 i = 0; i < F25->size(); ++i) {
        if (F25->is_zero(gfp::eval(lifted, F25->element_at(i)))) ++roots;
    }
    CHECK(roots == 2);
}
