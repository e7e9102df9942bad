#include <doctest.h>

#include "dynatomic/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace dynatomic;

TEST_CASE("mobius values") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(3) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(210) == 1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
    CHECK_THROWS_AS(mobius(-5), std::invalid_argument);
}

TEST_CASE("divisor lists") {
    CHECK(divisors(1).divisors == std::vector<std::int64_t>{1});
    CHECK(divisors(6).divisors == std::vector<std::int64_t>{1, 2, 3, 6});
    CHECK(divisors(12).divisors == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);

    for (std::int64_t n : {2, 9, 16, 36, 97, 360, 1024}) {
        auto d = divisors(n).divisors;
        CHECK(d.front() == 1);
        CHECK(d.back() == n);
        CHECK(std::is_sorted(d.begin(), d.end()));
        for (auto x : d) CHECK(n % x == 0);
        // Even length exactly when n is not a perfect square.
        std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
        bool square = r * r == n;
        CHECK((d.size() % 2 == 0) == !square);
    }
}

TEST_CASE("mobius sums over divisor lattices vanish") {
    for (std::int64_t n = 2; n <= 400; ++n) {
        int s = 0;
        for (auto d : divisors(n).divisors) s += mobius(d);
        CHECK(s == 0);
    }
    CHECK(mobius(1) == 1);
}

TEST_CASE("mobius is multiplicative on coprime arguments") {
    for (std::int64_t a = 1; a <= 40; ++a) {
        for (std::int64_t b = 1; b <= 40; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(mobius(a * b) == mobius(a) * mobius(b));
        }
    }
}
