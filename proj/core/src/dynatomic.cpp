#include "dynatomic/dynatomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynatomic {

long OrbitCell::a_star(long n) const {
    long s = 0;
    for (auto d : divisors(n).divisors) {
        auto it = a.find(d);
        if (it == a.end()) throw std::logic_error("OrbitCell: missing level " + std::to_string(d));
        s += mobius(n / d) * it->second;
    }
    return s;
}

// --- UniEngineQ --------------------------------------------------------------

UniEngineQ::UniEngineQ(QPoly phi) : phi_(std::move(phi)) {
    qp::trim(phi_);
    if (qp::deg(phi_) < 1) {
        throw std::invalid_argument("UniEngineQ: map must be a polynomial of degree >= 1");
    }
}

const QPoly& UniEngineQ::iterate_poly(long n) {
    if (n < 1) throw std::invalid_argument("iterate_poly: n >= 1 required");
    auto it = iter_.find(n);
    if (it != iter_.end()) return it->second;
    if (n == 1) return iter_.emplace(1, phi_).first->second;
    // phi^n = phi(phi^(n-1)); composing the small map into the big iterate
    // keeps the Horner loop short.
    const QPoly& prev = iterate_poly(n - 1);
    return iter_.emplace(n, qp::compose(phi_, prev)).first->second;
}

QPoly UniEngineQ::periodic(long n) {
    QPoly f = qp::sub(iterate_poly(n), QPoly{Rational(0), Rational(1)});
    if (f.empty()) {
        throw DegeneracyError("phi^" + std::to_string(n) + "(z) - z vanishes identically");
    }
    return f;
}

UniEngineQ::Dyn UniEngineQ::dynatomic(long n) {
    // One numerator/denominator split: only the final quotient is guaranteed
    // to be a polynomial, intermediate sequential divisions are not.
    QPoly num{Rational(1)}, den{Rational(1)};
    for (auto d : divisors(n).divisors) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        QPoly f = periodic(d);
        if (mu > 0) num = qp::mul(num, f);
        else den = qp::mul(den, f);
    }
    Dyn out;
    out.certificate = qp::exact_divide(num, den, out.value);
    if (!out.certificate) out.value.clear();
    return out;
}

long UniEngineQ::mult_at(long n, const Rational& P) {
    return qp::order_at(periodic(n), P);
}

long UniEngineQ::formal_mult_at(long n, const Rational& P) {
    long s = 0;
    for (auto d : divisors(n).divisors) s += mobius(n / d) * mult_at(d, P);
    return s;
}

const std::vector<std::pair<QPoly, long>>& UniEngineQ::squarefree_blocks(long n) {
    auto it = sqf_.find(n);
    if (it != sqf_.end()) return it->second;
    return sqf_.emplace(n, qp::squarefree_decomposition(periodic(n))).first->second;
}

std::vector<OrbitCell> UniEngineQ::cells(const std::vector<long>& levels) {
    std::vector<long> ls = levels;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    for (auto n : ls) {
        for (auto d : divisors(n).divisors) {
            if (!std::binary_search(ls.begin(), ls.end(), d)) {
                throw std::invalid_argument("cells: level set must be divisor-closed");
            }
        }
    }

    // Squarefree parts s_d; roots of s_d are the points of period dividing d,
    // so s_m / prod_{d | m, d < m} C_d peels off exactly the minimal-period-m
    // layer C_m. Each division is certified exact.
    std::map<long, QPoly> layer;
    for (auto m : ls) {
        QPoly q{Rational(1)};
        for (const auto& [block, mult] : squarefree_blocks(m)) q = qp::mul(q, block);
        for (auto d : divisors(m).divisors) {
            if (d == m) continue;
            QPoly q2;
            if (!qp::exact_divide(q, layer.at(d), q2)) {
                throw InternalConsistencyError("minimal-period layer division left a remainder");
            }
            q = std::move(q2);
        }
        layer.emplace(m, std::move(q));
    }

    // Refine each layer against the multiplicity blocks of every level it
    // participates in, and record the per-level multiplicities.
    std::vector<OrbitCell> out;
    for (auto m : ls) {
        if (qp::deg(layer.at(m)) < 1) continue; // no points of minimal period m
        struct Piece {
            QPoly poly;
            std::map<long, long> a;
        };
        std::vector<Piece> pieces{Piece{layer.at(m), {}}};
        for (auto d : ls) {
            if (d % m != 0) {
                for (auto& p : pieces) p.a[d] = 0;
                continue;
            }
            const auto& blocks = squarefree_blocks(d);
            if (blocks.size() == 1) {
                for (auto& p : pieces) p.a[d] = blocks[0].second;
                continue;
            }
            std::vector<Piece> next;
            for (auto& p : pieces) {
                QPoly rest = p.poly;
                for (const auto& [block, mult] : blocks) {
                    if (qp::deg(rest) < 1) break;
                    QPoly g = qp::gcd(rest, block);
                    if (qp::deg(g) < 1) continue;
                    Piece np{g, p.a};
                    np.a[d] = mult;
                    next.push_back(std::move(np));
                    QPoly q2;
                    if (!qp::exact_divide(rest, g, q2)) {
                        throw InternalConsistencyError("cell refinement division left a remainder");
                    }
                    rest = std::move(q2);
                }
                if (qp::deg(rest) >= 1) {
                    throw InternalConsistencyError("cell has roots outside every block");
                }
            }
            pieces = std::move(next);
        }
        for (auto& p : pieces) {
            OrbitCell cell;
            cell.factor = std::move(p.poly);
            cell.minimal_period = m;
            cell.a = std::move(p.a);
            out.push_back(std::move(cell));
        }
    }
    return out;
}

// --- UniEngineGF -------------------------------------------------------------

UniEngineGF::UniEngineGF(GFPoly phi) : phi_(std::move(phi)) {
    gfp::trim(phi_);
    if (phi_.degree() < 1) {
        throw std::invalid_argument("UniEngineGF: map must be a polynomial of degree >= 1");
    }
}

const GFPoly& UniEngineGF::iterate_poly(long n) {
    if (n < 1) throw std::invalid_argument("iterate_poly: n >= 1 required");
    auto it = iter_.find(n);
    if (it != iter_.end()) return it->second;
    if (n == 1) return iter_.emplace(1, phi_).first->second;
    const GFPoly& prev = iterate_poly(n - 1);
    return iter_.emplace(n, gfp::compose(phi_, prev)).first->second;
}

GFPoly UniEngineGF::periodic(long n) {
    GFPoly z = gfp::from_coeffs(phi_.F, {phi_.F->zero(), phi_.F->one()});
    GFPoly f = gfp::sub(iterate_poly(n), z);
    if (f.is_zero()) {
        throw DegeneracyError("phi^" + std::to_string(n) + "(z) - z vanishes identically over " +
                              phi_.F->name());
    }
    return f;
}

UniEngineGF::Dyn UniEngineGF::dynatomic(long n) {
    GFPoly num = gfp::constant(phi_.F, phi_.F->one());
    GFPoly den = num;
    for (auto d : divisors(n).divisors) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        GFPoly f = periodic(d);
        if (mu > 0) num = gfp::mul(num, f);
        else den = gfp::mul(den, f);
    }
    Dyn out{gfp::zero(phi_.F), false};
    out.certificate = gfp::exact_divide(num, den, out.value);
    if (!out.certificate) out.value = gfp::zero(phi_.F);
    return out;
}

const GFPtr& UniEngineGF::extension(int j) {
    auto it = ext_.find(j);
    if (it != ext_.end()) return it->second;
    GFPtr e = (j == 1) ? phi_.F : GFContext::make(phi_.F->p(), phi_.F->k() * j);
    return ext_.emplace(j, std::move(e)).first->second;
}

const GFPoly& UniEngineGF::periodic_lifted(long n, int j) {
    auto key = std::make_pair(n, j);
    auto it = lifted_.find(key);
    if (it != lifted_.end()) return it->second;
    GFPoly f = periodic(n);
    if (j > 1) f = gfp::lift(f, extension(j));
    return lifted_.emplace(key, std::move(f)).first->second;
}

long UniEngineGF::mult_at(long n, const GFContext::Elem& P, int j) {
    return gfp::order_at(periodic_lifted(n, j), P);
}

long UniEngineGF::formal_mult_at(long n, const GFContext::Elem& P, int j) {
    long s = 0;
    for (auto d : divisors(n).divisors) s += mobius(n / d) * mult_at(d, P, j);
    return s;
}

// --- ProjEngine ----------------------------------------------------------------

ProjEngine::ProjEngine(PolyMap map) : map_(std::move(map)) {
    if (map_.model() != PolyMap::Model::Projective) {
        throw std::invalid_argument("ProjEngine: projective model required");
    }
}

const std::pair<Poly, Poly>& ProjEngine::iterate_pair(long n) {
    if (n < 1) throw std::invalid_argument("iterate_pair: n >= 1 required");
    auto it = iter_.find(n);
    if (it != iter_.end()) return it->second;
    if (n == 1) {
        return iter_.emplace(1, std::make_pair(map_.coords()[0], map_.coords()[1])).first->second;
    }
    const auto& prev = iterate_pair(n - 1);
    std::vector<Poly> images{prev.first, prev.second};
    std::pair<Poly, Poly> next{map_.coords()[0].substitute(images),
                               map_.coords()[1].substitute(images)};
    return iter_.emplace(n, std::move(next)).first->second;
}

Poly ProjEngine::periodic_form(long n) {
    const auto& [F, G] = iterate_pair(n);
    const Field& f = map_.field();
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
    Poly H = y * F - x * G;
    if (H.is_zero()) {
        throw DegeneracyError("phi^" + std::to_string(n) + " is the identity on P^1");
    }
    return H;
}

Poly ProjEngine::affine_periodic(long n) {
    Poly H = periodic_form(n);
    Poly out(map_.field(), 1);
    for (const auto& [m, c] : H.terms()) out.add_term(Monomial{{m.e[0]}}, c);
    return out;
}

long ProjEngine::infinity_mult(long n) {
    Poly H = periodic_form(n);
    std::int64_t mn = -1;
    for (const auto& [m, c] : H.terms()) {
        mn = (mn < 0) ? m.e[1] : std::min(mn, m.e[1]);
    }
    return static_cast<long>(mn);
}

long ProjEngine::formal_infinity_mult(long n) {
    long s = 0;
    for (auto d : divisors(n).divisors) s += mobius(n / d) * infinity_mult(d);
    return s;
}

ProjEngine::Dyn ProjEngine::dynatomic(long n) {
    Dyn out{Poly::zero(map_.field(), 1), false, 0};
    out.infinity_formal_mult = formal_infinity_mult(n);
    const Field& f = map_.field();
    Poly num = Poly::constant(f, 1, FieldElement::one(f));
    Poly den = num;
    for (auto d : divisors(n).divisors) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        Poly h = affine_periodic(d);
        if (mu > 0) num = num * h;
        else den = den * h;
    }
    bool affine_ok = false;
    if (f.kind() == FieldKind::Rationals) {
        QPoly q;
        affine_ok = qp::exact_divide(to_qpoly(num), to_qpoly(den), q);
        if (affine_ok) out.value = from_qpoly(q);
    } else if (f.kind() == FieldKind::Finite) {
        GFPoly q = gfp::zero(f.gf());
        affine_ok = gfp::exact_divide(to_gfpoly(num), to_gfpoly(den), q);
        if (affine_ok) out.value = from_gfpoly(q);
    } else {
        throw std::invalid_argument("ProjEngine::dynatomic: unsupported coefficient field");
    }
    out.certificate = affine_ok && out.infinity_formal_mult >= 0;
    return out;
}

// --- free operations -----------------------------------------------------------

namespace {

void require_uni_affine(const PolyMap& map) {
    if (map.model() != PolyMap::Model::Affine || map.dimension() != 1) {
        throw std::invalid_argument("expected a univariate affine polynomial map");
    }
}

} // namespace

Poly periodic_poly(const PolyMap& map, long n) {
    if (map.model() == PolyMap::Model::Projective) {
        return ProjEngine(map).affine_periodic(n);
    }
    require_uni_affine(map);
    if (map.field().kind() == FieldKind::Rationals) {
        return from_qpoly(UniEngineQ(to_qpoly(map.coords()[0])).periodic(n));
    }
    if (map.field().kind() == FieldKind::Finite) {
        return from_gfpoly(UniEngineGF(to_gfpoly(map.coords()[0])).periodic(n));
    }
    throw std::invalid_argument("periodic_poly: unsupported coefficient field");
}

DynatomicResult dynatomic_poly(const PolyMap& map, long n) {
    DynatomicResult out;
    out.n = n;
    out.phi_n_minus_z = periodic_poly(map, n);
    if (map.model() == PolyMap::Model::Projective) {
        ProjEngine eng(map);
        auto d = eng.dynatomic(n);
        out.dynatomic = d.value;
        out.division_certificate = d.certificate;
        return out;
    }
    if (map.field().kind() == FieldKind::Rationals) {
        auto d = UniEngineQ(to_qpoly(map.coords()[0])).dynatomic(n);
        out.dynatomic = from_qpoly(d.value);
        out.division_certificate = d.certificate;
    } else {
        auto d = UniEngineGF(to_gfpoly(map.coords()[0])).dynatomic(n);
        out.dynatomic = from_gfpoly(d.value);
        out.division_certificate = d.certificate;
    }
    return out;
}

long multiplicity_at(const PolyMap& map, long n, const Rational& P) {
    Poly f = periodic_poly(map, n); // affine chart for projective maps
    if (map.field().kind() == FieldKind::Rationals) {
        return qp::order_at(to_qpoly(f), P);
    }
    if (map.field().kind() == FieldKind::Finite) {
        return gfp::order_at(to_gfpoly(f), map.field().gf()->from_rational(P));
    }
    throw std::invalid_argument("multiplicity_at: unsupported coefficient field");
}

long formal_multiplicity_at(const PolyMap& map, long n, const Rational& P) {
    long s = 0;
    for (auto d : divisors(n).divisors) s += mobius(n / d) * multiplicity_at(map, d, P);
    return s;
}

long infinity_multiplicity(const PolyMap& map, long n) {
    return ProjEngine(map).infinity_mult(n);
}

} // namespace dynatomic
