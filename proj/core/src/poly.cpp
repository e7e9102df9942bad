#include "dynatomic/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dynatomic {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return r;
}

} // namespace

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (auto x : e) d = checked_add(d, x);
    return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.e < b.e; // lexicographic, first variable most significant
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("monomial arity mismatch");
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = checked_add(r.e[i], b.e[i]);
    return r;
}

Poly::Poly(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("Poly: needs at least one variable");
}

Poly Poly::zero(const Field& f, int nvars) { return Poly(f, nvars); }

Poly Poly::constant(const Field& f, int nvars, const FieldElement& c) {
    Poly r(f, nvars);
    if (!c.is_zero()) r.terms_.emplace(Monomial{std::vector<std::int64_t>(nvars, 0)}, c);
    return r;
}

Poly Poly::variable(const Field& f, int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("Poly::variable index");
    Poly r(f, nvars);
    Monomial m{std::vector<std::int64_t>(nvars, 0)};
    m.e[index] = 1;
    r.terms_.emplace(std::move(m), FieldElement::one(f));
    return r;
}

std::int64_t Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

std::int64_t Poly::degree_in(int var) const {
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

void Poly::add_term(const Monomial& m, const FieldElement& c) {
    if (static_cast<int>(m.e.size()) != nvars_) throw std::invalid_argument("add_term: arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

FieldElement Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void Poly::require_compatible(const Poly& o) const {
    if (field_ != o.field_) throw std::invalid_argument("Poly: mixed coefficient fields");
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: mixed variable counts");
}

Poly Poly::operator+(const Poly& o) const {
    require_compatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_compatible(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_compatible(o);
    Poly r(field_, nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            r.add_term(monomial_mul(ma, mb), ca * cb);
        }
    }
    return r;
}

Poly Poly::scale(const FieldElement& c) const {
    Poly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) {
        FieldElement v = x * c;
        if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
    }
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly acc = constant(field_, nvars_, FieldElement::one(field_));
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

FieldElement Poly::eval(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: arity mismatch");
    FieldElement acc = FieldElement::zero(field_);
    for (const auto& [m, c] : terms_) {
        FieldElement t = c;
        for (int i = 0; i < nvars_; ++i) {
            if (m.e[i] != 0) t = t * point[i].pow(m.e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: arity mismatch");
    const int out_vars = images.empty() ? nvars_ : images[0].nvars();
    Poly acc = Poly::zero(field_, out_vars);
    // Per-variable power caches keep repeated exponents cheap.
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power = [&](int var, std::int64_t e) -> const Poly& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Poly::constant(field_, out_vars, FieldElement::one(field_)));
        while (static_cast<std::int64_t>(cache.size()) <= e) {
            cache.push_back(cache.back() * images[var]);
        }
        return cache[static_cast<size_t>(e)];
    };
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(field_, out_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m.e[i] != 0) t = t * power(i, m.e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

Poly Poly::shift(const std::vector<FieldElement>& P) const {
    if (static_cast<int>(P.size()) != nvars_) throw std::invalid_argument("shift: arity mismatch");
    std::vector<Poly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        images.push_back(Poly::variable(field_, nvars_, i) + Poly::constant(field_, nvars_, P[i]));
    }
    return substitute(images);
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() != d) return false;
    }
    return true;
}

std::string Poly::to_string(const std::vector<std::string>& var_names) const {
    if (static_cast<int>(var_names.size()) != nvars_) throw std::invalid_argument("to_string: arity mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded-lex.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool any_var = m.total_degree() > 0;
        bool coef_is_one = (cs == "1");
        if (!any_var || !coef_is_one) {
            // Parenthesize compound coefficients (rational functions in t);
            // plain rationals like 3/2 stay bare.
            bool compound = cs.find_first_of("+*^ ") != std::string::npos ||
                            cs.find('-') != std::string::npos;
            if (compound && any_var) os << "(" << cs << ")";
            else os << cs;
            if (any_var) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (m.e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var_names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

QPoly to_qpoly(const Poly& f) {
    if (f.field().kind() != FieldKind::Rationals || f.nvars() != 1) {
        throw std::invalid_argument("to_qpoly: expected univariate over Q");
    }
    QPoly r(static_cast<size_t>(f.total_degree() + 1), Rational(0));
    for (const auto& [m, c] : f.terms()) r[static_cast<size_t>(m.e[0])] = c.rational();
    qp::trim(r);
    return r;
}

Poly from_qpoly(const QPoly& f) {
    Poly r(Field::Q(), 1);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0) r.add_term(Monomial{{static_cast<std::int64_t>(i)}}, FieldElement::of(f[i]));
    }
    return r;
}

GFPoly to_gfpoly(const Poly& f) {
    if (f.field().kind() != FieldKind::Finite || f.nvars() != 1) {
        throw std::invalid_argument("to_gfpoly: expected univariate over a finite field");
    }
    GFPoly r = gfp::zero(f.field().gf());
    r.c.assign(static_cast<size_t>(f.total_degree() + 1), f.field().gf()->zero());
    for (const auto& [m, c] : f.terms()) r.c[static_cast<size_t>(m.e[0])] = c.gf_elem();
    gfp::trim(r);
    return r;
}

Poly from_gfpoly(const GFPoly& f) {
    Field fld = Field::GF(f.F);
    Poly r(fld, 1);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!f.F->is_zero(f.c[i])) {
            r.add_term(Monomial{{static_cast<std::int64_t>(i)}}, FieldElement::of(fld, f.c[i]));
        }
    }
    return r;
}

std::vector<RatFunc> to_tcoeffs(const Poly& f) {
    if (f.field().kind() != FieldKind::RationalFunctions || f.nvars() != 1) {
        throw std::invalid_argument("to_tcoeffs: expected univariate over Q(t)");
    }
    std::vector<RatFunc> r(static_cast<size_t>(f.total_degree() + 1));
    for (const auto& [m, c] : f.terms()) r[static_cast<size_t>(m.e[0])] = c.rat_func();
    return r;
}

Poly from_tcoeffs(const std::vector<RatFunc>& coeffs) {
    Poly r(Field::Qt(), 1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) {
            r.add_term(Monomial{{static_cast<std::int64_t>(i)}}, FieldElement::of(coeffs[i]));
        }
    }
    return r;
}

Poly specialize_parameter(const Poly& f, const Rational& t0) {
    if (f.field().kind() != FieldKind::RationalFunctions) {
        throw std::invalid_argument("specialize_parameter: polynomial is not over Q(t)");
    }
    Poly r(Field::Q(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Rational v = rf::eval(c.rat_func(), t0); // throws on pole
        if (v != 0) r.add_term(m, FieldElement::of(v));
    }
    return r;
}

} // namespace dynatomic
