#ifndef DYNATOMIC_RATIONAL_FUNCTION_HPP
#define DYNATOMIC_RATIONAL_FUNCTION_HPP

// Elements of Q(t): reduced fractions of dense rational polynomials in the
// deformation parameter. Invariant: numerator and denominator coprime,
// denominator monic (zero is 0/1).

#include "dynatomic/qpoly.hpp"

namespace dynatomic {

struct RatFunc {
    QPoly num;
    QPoly den{Rational(1)};

    bool is_zero() const { return num.empty(); }
    bool is_polynomial() const { return qp::deg(den) == 0; }
    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

namespace rf {

RatFunc make(QPoly num, QPoly den); // reduces; throws on zero denominator
RatFunc from_rational(const Rational& q);
RatFunc from_poly(QPoly p);

RatFunc add(const RatFunc& a, const RatFunc& b);
RatFunc sub(const RatFunc& a, const RatFunc& b);
RatFunc mul(const RatFunc& a, const RatFunc& b);
RatFunc div(const RatFunc& a, const RatFunc& b);
RatFunc neg(const RatFunc& a);
RatFunc inv(const RatFunc& a);

// Evaluation at t = t0; throws std::domain_error on a pole.
Rational eval(const RatFunc& a, const Rational& t0);
bool has_pole_at(const RatFunc& a, const Rational& t0);

long t_degree(const RatFunc& a); // deg num - deg den; LONG_MIN-ish for zero

std::string to_string(const RatFunc& a, const std::string& var = "t");

} // namespace rf
} // namespace dynatomic

#endif
