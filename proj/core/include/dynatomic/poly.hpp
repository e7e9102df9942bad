#ifndef DYNATOMIC_POLY_HPP
#define DYNATOMIC_POLY_HPP

// Sparse multivariate polynomials over a runtime coefficient field, with a
// fixed graded-lexicographic term order. Exponents are machine integers with
// overflow detection (errors are reported, never wrapped).

#include "dynatomic/field.hpp"
#include "dynatomic/gfpoly.hpp"
#include "dynatomic/qpoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dynatomic {

struct Monomial {
    std::vector<std::int64_t> e;

    std::int64_t total_degree() const;
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lex: lower total degree first, ties broken lexicographically with
// the first variable most significant.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b); // checked add

class Poly {
public:
    using TermMap = std::map<Monomial, FieldElement, GradedLexLess>;

    Poly() : field_(Field::Q()), nvars_(1) {} // zero over Q in one variable
    Poly(Field field, int nvars);
    static Poly zero(const Field& f, int nvars);
    static Poly constant(const Field& f, int nvars, const FieldElement& c);
    static Poly variable(const Field& f, int nvars, int index);

    const Field& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::int64_t total_degree() const; // -1 for zero
    std::int64_t degree_in(int var) const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Accumulates c on the monomial, erasing the term if it cancels.
    void add_term(const Monomial& m, const FieldElement& c);
    FieldElement coefficient(const Monomial& m) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scale(const FieldElement& c) const;
    Poly pow(long e) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    FieldElement eval(const std::vector<FieldElement>& point) const;
    // Substitute each variable by a polynomial (all in the same ambient ring).
    Poly substitute(const std::vector<Poly>& images) const;
    // f(x + P): the origin shift used by the local computations.
    Poly shift(const std::vector<FieldElement>& P) const;

    bool is_homogeneous() const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    void require_compatible(const Poly& o) const;
    Field field_;
    int nvars_;
    TermMap terms_;
};

// Univariate bridges between the sparse layer and the dense engines.
QPoly to_qpoly(const Poly& f);               // field Q, nvars 1
Poly from_qpoly(const QPoly& f);
GFPoly to_gfpoly(const Poly& f);             // finite field, nvars 1
Poly from_gfpoly(const GFPoly& f);
// Univariate over Q(t) <-> bivariate view used for canonical printing.
std::vector<RatFunc> to_tcoeffs(const Poly& f);
Poly from_tcoeffs(const std::vector<RatFunc>& coeffs);

// Coefficientwise evaluation at t = t0 of a polynomial over Q(t); throws
// std::domain_error if any coefficient has a pole at t0.
Poly specialize_parameter(const Poly& f, const Rational& t0);

} // namespace dynatomic

#endif
