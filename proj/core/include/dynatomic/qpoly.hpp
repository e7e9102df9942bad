#ifndef DYNATOMIC_QPOLY_HPP
#define DYNATOMIC_QPOLY_HPP

// Dense univariate polynomials over Q: coefficient vectors, lowest degree
// first, no trailing zeros. This is the exact engine behind the univariate
// dynatomic computations; the sparse multivariate Poly converts to and from
// it at module boundaries.

#include "dynatomic/rational.hpp"
#include "dynatomic/zp.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dynatomic {

using QPoly = std::vector<Rational>;

namespace qp {

void trim(QPoly& f);
inline long deg(const QPoly& f) { return static_cast<long>(f.size()) - 1; }
inline bool is_zero(const QPoly& f) { return f.empty(); }
QPoly constant(const Rational& c);
QPoly monomial(long k, const Rational& c);
bool equal(const QPoly& f, const QPoly& g);

Rational lc(const QPoly& f);
QPoly make_monic(const QPoly& f);

QPoly neg(const QPoly& f);
QPoly add(const QPoly& f, const QPoly& g);
QPoly sub(const QPoly& f, const QPoly& g);
QPoly scale(const QPoly& f, const Rational& c);

// Dispatches to Kronecker substitution for large operands; both routes are
// exposed so the property tests can cross-check them.
QPoly mul(const QPoly& f, const QPoly& g);
QPoly mul_schoolbook(const QPoly& f, const QPoly& g);
QPoly mul_kronecker(const QPoly& f, const QPoly& g);

QPoly pow(const QPoly& f, long e);

Rational eval(const QPoly& f, const Rational& x);
QPoly derivative(const QPoly& f);
QPoly compose(const QPoly& f, const QPoly& g); // f(g(x))
QPoly shift(const QPoly& f, const Rational& c); // f(x + c)

void divrem(const QPoly& f, const QPoly& g, QPoly& q, QPoly& r);
// true and sets q iff g | f exactly.
bool exact_divide(const QPoly& f, const QPoly& g, QPoly& q);

// Multiplicity of x = r as a root (0 if not a root). Synthetic division.
long order_at(const QPoly& f, const Rational& r);

// Monic gcd. Modular certificate for the coprime case, CRT + rational
// reconstruction otherwise, verified by exact division into both inputs.
QPoly gcd(const QPoly& f, const QPoly& g);

// Yun's algorithm: f = lc * prod blocks[i].first ^ blocks[i].second with
// monic pairwise-coprime squarefree blocks, multiplicities increasing.
std::vector<std::pair<QPoly, long>> squarefree_decomposition(const QPoly& f);
QPoly squarefree_part(const QPoly& f);

Rational resultant(const QPoly& f, const QPoly& g);
Rational discriminant(const QPoly& f);

// All rational roots with multiplicities, complete per the rational root
// theorem. Throws std::overflow_error if the divisor enumeration of the
// cleared constant/leading coefficients is infeasible.
std::vector<std::pair<Rational, long>> rational_roots(const QPoly& f);

// Reduction mod p; fails (returns false) if a denominator or lc vanishes.
bool reduce_mod(const QPoly& f, zp::u64 p, zp::Poly& out);

// Clears denominators: f = (1/den) * F with F primitive over Z when
// primitive=true (content divided out and folded into den/num bookkeeping
// is the caller's concern; here den is just the common denominator).
void to_integer(const QPoly& f, std::vector<Integer>& F, Integer& den);

std::string to_string(const QPoly& f, const std::string& var);

} // namespace qp
} // namespace dynatomic

#endif
