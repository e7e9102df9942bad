#include "dynatomic/rational_function.hpp"

#include <stdexcept>

namespace dynatomic::rf {

RatFunc make(QPoly num, QPoly den) {
    qp::trim(num);
    qp::trim(den);
    if (den.empty()) throw std::domain_error("RatFunc: zero denominator");
    if (num.empty()) return RatFunc{};
    if (qp::deg(den) > 0) {
        QPoly g = qp::gcd(num, den);
        if (qp::deg(g) > 0) {
            QPoly q;
            qp::exact_divide(num, g, q);
            num = std::move(q);
            qp::exact_divide(den, g, q);
            den = std::move(q);
        }
    }
    const Rational l = qp::lc(den);
    if (l != 1) {
        den = qp::scale(den, Rational(1) / l);
        num = qp::scale(num, Rational(1) / l);
    }
    return RatFunc{std::move(num), std::move(den)};
}

RatFunc from_rational(const Rational& q) {
    if (q == 0) return RatFunc{};
    return RatFunc{qp::constant(q), qp::constant(Rational(1))};
}

RatFunc from_poly(QPoly p) {
    qp::trim(p);
    return RatFunc{std::move(p), qp::constant(Rational(1))};
}

RatFunc add(const RatFunc& a, const RatFunc& b) {
    return make(qp::add(qp::mul(a.num, b.den), qp::mul(b.num, a.den)), qp::mul(a.den, b.den));
}

RatFunc sub(const RatFunc& a, const RatFunc& b) {
    return make(qp::sub(qp::mul(a.num, b.den), qp::mul(b.num, a.den)), qp::mul(a.den, b.den));
}

RatFunc mul(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc{};
    return make(qp::mul(a.num, b.num), qp::mul(a.den, b.den));
}

RatFunc div(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    if (a.is_zero()) return RatFunc{};
    return make(qp::mul(a.num, b.den), qp::mul(a.den, b.num));
}

RatFunc neg(const RatFunc& a) { return RatFunc{qp::neg(a.num), a.den}; }

RatFunc inv(const RatFunc& a) {
    if (a.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return make(a.den, a.num);
}

bool has_pole_at(const RatFunc& a, const Rational& t0) {
    return qp::eval(a.den, t0) == 0 && qp::eval(a.num, t0) != 0;
}

Rational eval(const RatFunc& a, const Rational& t0) {
    Rational d = qp::eval(a.den, t0);
    if (d == 0) {
        // The stored fraction is reduced, so den(t0) = 0 is a genuine pole.
        throw std::domain_error("RatFunc: pole at t = " + dynatomic::to_string(t0));
    }
    return qp::eval(a.num, t0) / d;
}

long t_degree(const RatFunc& a) {
    if (a.is_zero()) return -1;
    return qp::deg(a.num) - qp::deg(a.den);
}

std::string to_string(const RatFunc& a, const std::string& var) {
    if (a.is_zero()) return "0";
    if (a.is_polynomial()) return qp::to_string(a.num, var);
    return "(" + qp::to_string(a.num, var) + ")/(" + qp::to_string(a.den, var) + ")";
}

} // namespace dynatomic::rf
