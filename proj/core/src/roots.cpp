#include "dynatomic/roots.hpp"

#include <boost/math/constants/constants.hpp>
#include <stdexcept>

namespace dynatomic {

Complex Complex::operator/(const Complex& o) const {
    BigFloat d = o.re * o.re + o.im * o.im;
    if (d == 0) throw std::domain_error("complex division by zero");
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigFloat Complex::abs() const {
    using boost::multiprecision::sqrt;
    return sqrt(re * re + im * im);
}

BigFloat to_bigfloat(const Rational& q) {
    return static_cast<BigFloat>(numerator(q)) / static_cast<BigFloat>(denominator(q));
}

Complex to_complex(const Rational& q) { return Complex{to_bigfloat(q), BigFloat(0)}; }

Complex eval_complex(const QPoly& f, const Complex& z) {
    Complex acc{BigFloat(0), BigFloat(0)};
    for (size_t i = f.size(); i-- > 0;) {
        acc = acc * z + to_complex(f[i]);
    }
    return acc;
}

std::optional<std::vector<Complex>> all_roots(const QPoly& f, int digits) {
    if (digits < 1 || digits > 45) {
        throw std::invalid_argument("all_roots: precision must be between 1 and 45 digits");
    }
    long d = qp::deg(f);
    if (d < 1) throw std::invalid_argument("all_roots: degree >= 1 required");
    QPoly fm = qp::make_monic(f);
    QPoly fd = qp::derivative(fm);

    // Cauchy bound for the root radius.
    BigFloat radius = 0;
    for (long i = 0; i < d; ++i) {
        BigFloat a = to_bigfloat(fm[static_cast<size_t>(i)]);
        if (a < 0) a = -a;
        if (a > radius) radius = a;
    }
    radius += 1;

    const BigFloat pi = boost::math::constants::pi<BigFloat>();
    std::vector<Complex> z(static_cast<size_t>(d));
    for (long i = 0; i < d; ++i) {
        // Perturbed circle: irrational-ish angle offset avoids symmetric stalls.
        BigFloat theta = (2 * pi * i) / d + BigFloat("0.39269908") + BigFloat(i) / (7 * d + 3);
        z[static_cast<size_t>(i)] = Complex{radius * cos(theta), radius * sin(theta)};
    }

    BigFloat tol = pow(BigFloat(10), -digits);
    const int max_iters = 400;
    for (int iter = 0; iter < max_iters; ++iter) {
        BigFloat worst = 0;
        for (long i = 0; i < d; ++i) {
            Complex zi = z[static_cast<size_t>(i)];
            Complex pv = eval_complex(fm, zi);
            Complex dv = eval_complex(fd, zi);
            Complex w;
            if (dv.abs() == 0) {
                // Exactly on a critical point: nudge.
                w = Complex{tol, tol};
            } else {
                w = pv / dv;
                Complex s{BigFloat(0), BigFloat(0)};
                for (long j = 0; j < d; ++j) {
                    if (j == i) continue;
                    Complex diff = zi - z[static_cast<size_t>(j)];
                    if (diff.abs() == 0) continue;
                    s = s + Complex{BigFloat(1), BigFloat(0)} / diff;
                }
                Complex denom = Complex{BigFloat(1), BigFloat(0)} - w * s;
                if (denom.abs() != 0) w = w / denom;
            }
            z[static_cast<size_t>(i)] = zi - w;
            BigFloat step = w.abs() / std::max(BigFloat(1), zi.abs());
            if (step > worst) worst = step;
        }
        if (worst < tol) return z;
    }
    return std::nullopt;
}

} // namespace dynatomic
