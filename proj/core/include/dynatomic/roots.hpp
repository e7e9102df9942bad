#ifndef DYNATOMIC_ROOTS_HPP
#define DYNATOMIC_ROOTS_HPP

// Simultaneous root refinement (Aberth-Ehrlich) at fixed software-float
// precision (cpp_bin_float_50, ~168-bit mantissa). The requested decimal
// precision only drives the convergence threshold; starting points sit on a
// deterministically perturbed circle so runs are reproducible.

#include "dynatomic/qpoly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <optional>
#include <vector>

namespace dynatomic {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

struct Complex {
    BigFloat re{0};
    BigFloat im{0};

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const;
    BigFloat abs() const;
};

BigFloat to_bigfloat(const Rational& q);
Complex to_complex(const Rational& q);

// All complex roots of f (counted with multiplicity as separate nearby
// values). Returns std::nullopt if the iteration failed to reach the
// threshold 10^-digits within the iteration cap.
std::optional<std::vector<Complex>> all_roots(const QPoly& f, int digits);

// Horner evaluation of an exact polynomial at a complex point.
Complex eval_complex(const QPoly& f, const Complex& z);

} // namespace dynatomic

#endif
