#include "dynatomic/gfpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dynatomic::gfp {

namespace {

void require_same_field(const GFPoly& f, const GFPoly& g) {
    if (!f.F->same(*g.F)) throw std::invalid_argument("GFPoly: mixed coefficient fields");
}

} // namespace

void trim(GFPoly& f) {
    while (!f.c.empty() && f.F->is_zero(f.c.back())) f.c.pop_back();
}

GFPoly zero(GFPtr F) { return GFPoly{std::move(F), {}}; }

GFPoly constant(GFPtr F, const GFContext::Elem& a) {
    GFPoly r{std::move(F), {a}};
    trim(r);
    return r;
}

GFPoly from_coeffs(GFPtr F, std::vector<GFContext::Elem> cs) {
    GFPoly r{std::move(F), std::move(cs)};
    trim(r);
    return r;
}

bool equal(const GFPoly& f, const GFPoly& g) {
    require_same_field(f, g);
    return f.c == g.c;
}

GFPoly add(const GFPoly& f, const GFPoly& g) {
    require_same_field(f, g);
    GFPoly r{f.F, {}};
    r.c.resize(std::max(f.c.size(), g.c.size()), f.F->zero());
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) r.c[i] = f.F->add(r.c[i], g.c[i]);
    trim(r);
    return r;
}

GFPoly sub(const GFPoly& f, const GFPoly& g) {
    require_same_field(f, g);
    GFPoly r{f.F, {}};
    r.c.resize(std::max(f.c.size(), g.c.size()), f.F->zero());
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (size_t i = 0; i < g.c.size(); ++i) r.c[i] = f.F->sub(r.c[i], g.c[i]);
    trim(r);
    return r;
}

GFPoly mul(const GFPoly& f, const GFPoly& g) {
    require_same_field(f, g);
    if (f.is_zero() || g.is_zero()) return zero(f.F);
    GFPoly r{f.F, std::vector<GFContext::Elem>(f.c.size() + g.c.size() - 1, f.F->zero())};
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.F->is_zero(f.c[i])) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (f.F->is_zero(g.c[j])) continue;
            r.c[i + j] = f.F->add(r.c[i + j], f.F->mul(f.c[i], g.c[j]));
        }
    }
    trim(r);
    return r;
}

GFPoly scale(const GFPoly& f, const GFContext::Elem& a) {
    GFPoly r = f;
    for (auto& x : r.c) x = f.F->mul(x, a);
    trim(r);
    return r;
}

GFPoly make_monic(const GFPoly& f) {
    if (f.is_zero()) return f;
    return scale(f, f.F->inv(f.c.back()));
}

GFPoly pow(const GFPoly& f, long e) {
    if (e < 0) throw std::invalid_argument("gfp::pow: negative exponent");
    GFPoly acc = constant(f.F, f.F->one());
    GFPoly base = f;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

GFContext::Elem eval(const GFPoly& f, const GFContext::Elem& x) {
    GFContext::Elem r = f.F->zero();
    for (size_t i = f.c.size(); i-- > 0;) r = f.F->add(f.F->mul(r, x), f.c[i]);
    return r;
}

GFPoly derivative(const GFPoly& f) {
    if (f.c.size() <= 1) return zero(f.F);
    GFPoly r{f.F, std::vector<GFContext::Elem>(f.c.size() - 1, f.F->zero())};
    for (size_t i = 1; i < f.c.size(); ++i) {
        r.c[i - 1] = f.F->mul(f.c[i], f.F->from_int(static_cast<std::int64_t>(i)));
    }
    trim(r);
    return r;
}

GFPoly compose(const GFPoly& f, const GFPoly& g) {
    GFPoly r = zero(f.F);
    for (size_t i = f.c.size(); i-- > 0;) {
        r = mul(r, g);
        r = add(r, constant(f.F, f.c[i]));
    }
    return r;
}

void divrem(const GFPoly& f, const GFPoly& g, GFPoly& q, GFPoly& r) {
    require_same_field(f, g);
    if (g.is_zero()) throw std::domain_error("gfp::divrem: division by zero polynomial");
    r = f;
    trim(r);
    q = zero(f.F);
    if (r.c.size() < g.c.size()) return;
    q.c.assign(r.c.size() - g.c.size() + 1, f.F->zero());
    const GFContext::Elem linv = f.F->inv(g.c.back());
    for (long i = static_cast<long>(q.c.size()) - 1; i >= 0; --i) {
        if (r.c.size() < g.c.size() + i) continue;
        GFContext::Elem c = f.F->mul(r.c[g.c.size() - 1 + i], linv);
        if (f.F->is_zero(c)) {
            if (r.c.size() == g.c.size() + i) r.c.pop_back();
            continue;
        }
        q.c[i] = c;
        for (size_t j = 0; j < g.c.size(); ++j) {
            r.c[i + j] = f.F->sub(r.c[i + j], f.F->mul(c, g.c[j]));
        }
        while (!r.c.empty() && f.F->is_zero(r.c.back())) r.c.pop_back();
    }
    trim(q);
    trim(r);
}

bool exact_divide(const GFPoly& f, const GFPoly& g, GFPoly& q) {
    GFPoly r = zero(f.F);
    divrem(f, g, q, r);
    return r.is_zero();
}

GFPoly gcd(GFPoly f, GFPoly g) {
    require_same_field(f, g);
    trim(f);
    trim(g);
    while (!g.is_zero()) {
        GFPoly q = zero(f.F), r = zero(f.F);
        divrem(f, g, q, r);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(f);
}

long order_at(const GFPoly& f, const GFContext::Elem& r) {
    if (f.is_zero()) throw std::domain_error("order_at: zero polynomial");
    GFPoly cur = f;
    long ord = 0;
    while (true) {
        GFContext::Elem rem;
        GFPoly next = zero(f.F);
        if (cur.c.size() == 1) {
            rem = cur.c[0];
        } else {
            next.c.assign(cur.c.size() - 1, f.F->zero());
            next.c.back() = cur.c.back();
            for (size_t i = cur.c.size() - 2; i >= 1; --i) {
                next.c[i - 1] = f.F->add(cur.c[i], f.F->mul(r, next.c[i]));
            }
            rem = f.F->add(cur.c[0], f.F->mul(r, next.c[0]));
        }
        if (!f.F->is_zero(rem)) return ord;
        ++ord;
        cur = std::move(next);
        if (cur.is_zero()) return ord;
    }
}

namespace {

// p-th root of f when f is a polynomial in x^p: exponents divide by p and
// coefficients map through the inverse Frobenius c -> c^(p^(k-1)).
GFPoly pth_root(const GFPoly& f) {
    const auto p = f.F->p();
    const int k = f.F->k();
    GFPoly r = zero(f.F);
    r.c.assign(f.c.size() / p + 1, f.F->zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.F->is_zero(f.c[i])) continue;
        if (i % p != 0) throw std::logic_error("pth_root: not a p-th power");
        r.c[i / p] = f.F->frobenius(f.c[i], k - 1);
    }
    trim(r);
    return r;
}

void merge_block(std::vector<std::pair<GFPoly, long>>& out, const GFPoly& block, long mult) {
    for (auto& [b, m] : out) {
        if (m == mult) { b = mul(b, block); return; }
    }
    out.emplace_back(block, mult);
}

} // namespace

std::vector<std::pair<GFPoly, long>> squarefree_decomposition(const GFPoly& f0) {
    if (f0.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<GFPoly, long>> out;
    GFPoly f = make_monic(f0);
    if (f.degree() == 0) return out;

    GFPoly fp = derivative(f);
    if (fp.is_zero()) {
        // f = g(x^p): recurse and multiply every multiplicity by p.
        for (auto& [b, m] : squarefree_decomposition(pth_root(f))) merge_block(out, b, m * f.F->p());
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        return out;
    }

    GFPoly g = gcd(f, fp);
    GFPoly w = zero(f.F);
    exact_divide(f, g, w);
    // Tame part: peel off multiplicity-i factors of w out of g.
    long i = 1;
    while (w.degree() > 0) {
        GFPoly y = gcd(w, g);
        GFPoly z = zero(f.F);
        exact_divide(w, y, z);
        if (z.degree() > 0) merge_block(out, z, i);
        ++i;
        w = std::move(y);
        GFPoly g2 = zero(f.F);
        exact_divide(g, w, g2);
        std::swap(g, g2);
    }
    // Wild part: whatever is left of g is a p-th power.
    if (g.degree() > 0) {
        for (auto& [b, m] : squarefree_decomposition(pth_root(g))) merge_block(out, b, m * f.F->p());
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

GFPoly squarefree_part(const GFPoly& f) {
    GFPoly r = constant(f.F, f.F->one());
    for (const auto& [block, mult] : squarefree_decomposition(f)) r = mul(r, block);
    return r;
}

GFPoly frobenius_power_mod(const GFPoly& f, int j) {
    // x^(q^j) mod f by j-fold exponentiation by q (q itself fits in u64).
    GFPoly x = from_coeffs(f.F, {f.F->zero(), f.F->one()});
    GFPoly acc = x;
    const zp::u64 q = f.F->size();
    for (int step = 0; step < j; ++step) {
        GFPoly base = acc, res = constant(f.F, f.F->one());
        zp::u64 e = q;
        while (e) {
            if (e & 1) {
                GFPoly quo = zero(f.F), rem = zero(f.F);
                divrem(mul(res, base), f, quo, rem);
                res = std::move(rem);
            }
            e >>= 1;
            if (e) {
                GFPoly quo = zero(f.F), rem = zero(f.F);
                divrem(mul(base, base), f, quo, rem);
                base = std::move(rem);
            }
        }
        acc = std::move(res);
    }
    return acc;
}

long count_roots_in_extension(const GFPoly& squarefree, int j) {
    if (squarefree.degree() < 1) return 0;
    GFPoly x = from_coeffs(squarefree.F, {squarefree.F->zero(), squarefree.F->one()});
    GFPoly diff = sub(frobenius_power_mod(squarefree, j), x);
    return gcd(squarefree, diff).degree();
}

GFPoly lift(const GFPoly& f, const GFPtr& dst) {
    if (f.F->same(*dst)) return GFPoly{dst, f.c};
    const GFContext::Elem gen = subfield_embedding(*f.F, *dst);
    GFPoly r = zero(dst);
    r.c.reserve(f.c.size());
    for (const auto& coeff : f.c) {
        // coeff = sum coeff[i] u^i maps to sum coeff[i] gen^i.
        GFContext::Elem acc = dst->zero();
        for (size_t i = coeff.size(); i-- > 0;) {
            acc = dst->mul(acc, gen);
            acc = dst->add(acc, dst->from_int(static_cast<std::int64_t>(coeff[i])));
        }
        r.c.push_back(std::move(acc));
    }
    trim(r);
    return r;
}

std::string to_string(const GFPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (f.F->is_zero(f.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        bool is_one = f.c[i] == f.F->one();
        if (i == 0 || !is_one) os << f.F->to_string(f.c[i]);
        if (i > 0) {
            if (!is_one) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace dynatomic::gfp
