#ifndef DYNATOMIC_GFPOLY_HPP
#define DYNATOMIC_GFPOLY_HPP

// Dense univariate polynomials over F_{p^k}. Coefficients lowest degree
// first, trimmed. Used by the finite-field cycle machinery (root orders,
// char-p squarefree decomposition, Frobenius-based root counting).

#include "dynatomic/finite_field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dynatomic {

struct GFPoly {
    GFPtr F;
    std::vector<GFContext::Elem> c;

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

namespace gfp {

void trim(GFPoly& f);
GFPoly zero(GFPtr F);
GFPoly constant(GFPtr F, const GFContext::Elem& a);
GFPoly from_coeffs(GFPtr F, std::vector<GFContext::Elem> cs);
bool equal(const GFPoly& f, const GFPoly& g);

GFPoly add(const GFPoly& f, const GFPoly& g);
GFPoly sub(const GFPoly& f, const GFPoly& g);
GFPoly mul(const GFPoly& f, const GFPoly& g);
GFPoly scale(const GFPoly& f, const GFContext::Elem& a);
GFPoly make_monic(const GFPoly& f);
GFPoly pow(const GFPoly& f, long e);

GFContext::Elem eval(const GFPoly& f, const GFContext::Elem& x);
GFPoly derivative(const GFPoly& f);
GFPoly compose(const GFPoly& f, const GFPoly& g);

void divrem(const GFPoly& f, const GFPoly& g, GFPoly& q, GFPoly& r);
bool exact_divide(const GFPoly& f, const GFPoly& g, GFPoly& q);
GFPoly gcd(GFPoly f, GFPoly g); // monic

long order_at(const GFPoly& f, const GFContext::Elem& r);

// Char-p squarefree decomposition with p-th power descent (handles f' = 0
// via p-th roots of coefficients). Monic blocks, multiplicities ascending.
std::vector<std::pair<GFPoly, long>> squarefree_decomposition(const GFPoly& f);
GFPoly squarefree_part(const GFPoly& f);

// x^(q^j) mod f over the coefficient field of size q; used to count roots
// in extensions: deg gcd(f, x^(q^j) - x) is the number of distinct roots of
// f lying in F_{q^j}.
GFPoly frobenius_power_mod(const GFPoly& f, int j);
long count_roots_in_extension(const GFPoly& squarefree, int j);

// Coefficientwise move into a larger field; src coefficients are mapped via
// the embedding of their field (requires src.F->k() | dst->k()).
GFPoly lift(const GFPoly& f, const GFPtr& dst);

std::string to_string(const GFPoly& f, const std::string& var);

} // namespace gfp
} // namespace dynatomic

#endif
