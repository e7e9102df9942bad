#include "dynatomic/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dynatomic {

// --- AlgebraicPoint -----------------------------------------------------------

AlgebraicPoint AlgebraicPoint::rational(std::vector<Rational> coords) {
    AlgebraicPoint p;
    p.kind = Kind::Rational;
    p.rational_coords = std::move(coords);
    return p;
}

AlgebraicPoint AlgebraicPoint::orbit(QPoly factor) {
    AlgebraicPoint p;
    p.kind = Kind::Orbit;
    p.orbit_factor = std::move(factor);
    return p;
}

AlgebraicPoint AlgebraicPoint::finite_field(int ext_degree, std::vector<GFContext::Elem> coords) {
    AlgebraicPoint p;
    p.kind = Kind::Finite;
    p.ext_degree = ext_degree;
    p.gf_coords = std::move(coords);
    return p;
}

AlgebraicPoint AlgebraicPoint::infinity() {
    AlgebraicPoint p;
    p.kind = Kind::Infinity;
    return p;
}

long AlgebraicPoint::orbit_size() const {
    if (kind == Kind::Orbit) return qp::deg(orbit_factor);
    return 1;
}

bool AlgebraicPoint::operator<(const AlgebraicPoint& o) const {
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    switch (kind) {
        case Kind::Rational: return rational_coords < o.rational_coords;
        case Kind::Orbit: return orbit_factor < o.orbit_factor;
        case Kind::Finite:
            if (ext_degree != o.ext_degree) return ext_degree < o.ext_degree;
            return gf_coords < o.gf_coords;
        case Kind::Infinity: return false;
    }
    return false;
}

bool AlgebraicPoint::operator==(const AlgebraicPoint& o) const {
    return !(*this < o) && !(o < *this);
}

std::string AlgebraicPoint::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Rational: {
            os << "(";
            for (size_t i = 0; i < rational_coords.size(); ++i) {
                if (i) os << ", ";
                os << dynatomic::to_string(rational_coords[i]);
            }
            os << ")";
            break;
        }
        case Kind::Orbit:
            os << "orbit[" << qp::to_string(orbit_factor, "z") << "]";
            break;
        case Kind::Finite: {
            os << "(";
            for (size_t i = 0; i < gf_coords.size(); ++i) {
                if (i) os << ", ";
                os << "[";
                for (size_t j = 0; j < gf_coords[i].size(); ++j) {
                    if (j) os << ",";
                    os << gf_coords[i][j];
                }
                os << "]";
            }
            os << ")@deg" << ext_degree;
            break;
        }
        case Kind::Infinity:
            os << "inf";
            break;
    }
    return os.str();
}

// --- ZeroCycle ----------------------------------------------------------------

void ZeroCycle::add(const AlgebraicPoint& p, long mult) {
    if (mult == 0) return;
    auto it = entries.find(p);
    if (it == entries.end()) {
        entries.emplace(p, mult);
        return;
    }
    it->second += mult;
    if (it->second == 0) entries.erase(it);
}

ZeroCycle& ZeroCycle::accumulate(const ZeroCycle& other, long scalar) {
    if (ambient != other.ambient || field != other.field) {
        throw std::invalid_argument("ZeroCycle: mixing cycles from different ambients");
    }
    for (const auto& [p, m] : other.entries) add(p, scalar * m);
    return *this;
}

long ZeroCycle::total() const {
    long t = 0;
    for (const auto& [p, m] : entries) t += m * p.orbit_size();
    return t;
}

EffectivityReport verify_effectivity(const ZeroCycle& cycle) {
    EffectivityReport rep;
    rep.total = cycle.total();
    for (const auto& [p, m] : cycle.entries) {
        if (m < 0) {
            rep.effective = false;
            rep.violations.emplace_back(p, m);
        }
    }
    return rep;
}

// --- F_q enumeration ------------------------------------------------------------

namespace {

struct GFMapContext {
    const PolyMap* map = nullptr;
    GFPtr base;
    int base_k = 1;
    zp::u64 p = 0;

    // Per extension degree j (over the base field): context and lifted coords.
    std::map<int, GFPtr> ext;
    std::map<int, std::vector<Poly>> lifted;

    const GFPtr& context(int j) {
        auto it = ext.find(j);
        if (it != ext.end()) return it->second;
        GFPtr c = (j == 1) ? base : GFContext::make(p, base_k * j);
        return ext.emplace(j, std::move(c)).first->second;
    }

    const std::vector<Poly>& coords(int j) {
        auto it = lifted.find(j);
        if (it != lifted.end()) return it->second;
        const GFPtr& dst = context(j);
        Field dstf = Field::GF(dst);
        std::vector<Poly> out;
        if (j == 1) {
            out = map->coords();
        } else {
            GFContext::Elem gen = subfield_embedding(*base, *dst);
            for (const auto& c : map->coords()) {
                Poly lifted_poly(dstf, c.nvars());
                for (const auto& [m, coef] : c.terms()) {
                    const auto& e = coef.gf_elem();
                    GFContext::Elem acc = dst->zero();
                    for (size_t i = e.size(); i-- > 0;) {
                        acc = dst->mul(acc, gen);
                        acc = dst->add(acc, dst->from_int(static_cast<std::int64_t>(e[i])));
                    }
                    lifted_poly.add_term(m, FieldElement::of(dstf, acc));
                }
                out.push_back(std::move(lifted_poly));
            }
        }
        return lifted.emplace(j, std::move(out)).first->second;
    }
};

void require_gf(const PolyMap& map) {
    if (map.field().kind() != FieldKind::Finite) {
        throw std::invalid_argument("enumeration requires a map over a finite field");
    }
}

// Degree over the base field F_q of the subfield generated by one coordinate
// (whose degree over F_p is d_p inside F_{p^(k j)}).
int degree_over_base(int d_p, int base_k) {
    return std::lcm(d_p, base_k) / base_k;
}

// Walks the orbit of an affine point; returns its minimal period if it is
// n-periodic, 0 otherwise.
long minimal_period_affine(const std::vector<Poly>& coords, const GFPtr& F,
                           const std::vector<GFContext::Elem>& start, long n) {
    Field f = Field::GF(F);
    std::vector<FieldElement> cur;
    cur.reserve(start.size());
    for (const auto& c : start) cur.push_back(FieldElement::of(f, c));
    std::vector<FieldElement> origin = cur;
    for (long m = 1; m <= n; ++m) {
        std::vector<FieldElement> next;
        next.reserve(coords.size());
        for (const auto& c : coords) next.push_back(c.eval(cur));
        if (next == origin) return (n % m == 0) ? m : 0;
        cur = std::move(next);
    }
    return 0;
}

// Projective orbit step on P^1 in chart form.
struct P1Point {
    bool at_inf = false;
    GFContext::Elem a; // chart coordinate when finite
};

P1Point p1_apply(const std::vector<Poly>& FG, const GFPtr& F, const P1Point& pt) {
    Field f = Field::GF(F);
    std::vector<FieldElement> xy;
    if (pt.at_inf) {
        xy = {FieldElement::of(f, F->one()), FieldElement::of(f, F->zero())};
    } else {
        xy = {FieldElement::of(f, pt.a), FieldElement::of(f, F->one())};
    }
    GFContext::Elem num = FG[0].eval(xy).gf_elem();
    GFContext::Elem den = FG[1].eval(xy).gf_elem();
    if (F->is_zero(den)) {
        if (F->is_zero(num)) throw InternalConsistencyError("morphism vanished at a point of P^1");
        return P1Point{true, F->zero()};
    }
    return P1Point{false, F->mul(num, F->inv(den))};
}

long minimal_period_p1(const std::vector<Poly>& FG, const GFPtr& F, const P1Point& start, long n) {
    P1Point cur = start;
    auto equal = [&](const P1Point& x, const P1Point& y) {
        if (x.at_inf != y.at_inf) return false;
        return x.at_inf || x.a == y.a;
    };
    for (long m = 1; m <= n; ++m) {
        cur = p1_apply(FG, F, cur);
        if (equal(cur, start)) return (n % m == 0) ? m : 0;
    }
    return 0;
}

void check_multivariate_degeneracy(const PolyMap& map, long n) {
    for (auto d : divisors(n).divisors) {
        if (iterate(map, d).is_identity()) {
            throw DegeneracyError("phi^" + std::to_string(d) + " is the identity map");
        }
    }
}

} // namespace

std::vector<PeriodicPoint> enumerate_periodic(const PolyMap& map, long n, int k_max) {
    require_gf(map);
    if (k_max < 1) throw std::invalid_argument("enumerate_periodic: k_max >= 1 required");
    if (n < 1) throw std::invalid_argument("enumerate_periodic: n >= 1 required");

    GFMapContext ctx;
    ctx.map = &map;
    ctx.base = map.field().gf();
    ctx.base_k = ctx.base->k();
    ctx.p = ctx.base->p();

    const bool projective = map.model() == PolyMap::Model::Projective;
    const int b = projective ? 1 : map.dimension();

    if (!projective) {
        check_multivariate_degeneracy(map, n);
    } else {
        ProjEngine probe(map);
        for (auto d : divisors(n).divisors) probe.periodic_form(d); // throws on degeneracy
    }

    // Resource guard: the scan below touches q^(j b) points per level j.
    {
        double total = 0;
        for (int j = 1; j <= k_max; ++j) {
            total += std::pow(static_cast<double>(ctx.base->size()),
                              static_cast<double>(j) * b);
        }
        if (total > 2.0e7) throw std::overflow_error("enumerate_periodic: extension cap too large");
    }

    std::vector<PeriodicPoint> out;
    for (int j = 1; j <= k_max; ++j) {
        const GFPtr& F = ctx.context(j);
        const auto& coords = ctx.coords(j);
        const zp::u64 field_size = F->size();

        if (projective && j == 1) {
            // The point at infinity is rational over the base field.
            long m = minimal_period_p1(coords, F, P1Point{true, F->zero()}, n);
            if (m > 0) {
                PeriodicPoint pp;
                pp.ext_degree = 1;
                pp.at_infinity = true;
                pp.minimal_period = m;
                out.push_back(std::move(pp));
            }
        }

        std::vector<zp::u64> idx(static_cast<size_t>(b), 0);
        bool done = false;
        while (!done) {
            std::vector<GFContext::Elem> pt;
            pt.reserve(static_cast<size_t>(b));
            int lcm_deg = 1;
            for (int i = 0; i < b; ++i) {
                GFContext::Elem e = F->element_at(idx[static_cast<size_t>(i)]);
                lcm_deg = std::lcm(lcm_deg, degree_over_base(F->minimal_degree(e), ctx.base_k));
                pt.push_back(std::move(e));
            }
            // Count each point once, in its minimal field of definition.
            if (lcm_deg == j) {
                long m;
                if (projective) {
                    m = minimal_period_p1(coords, F, P1Point{false, pt[0]}, n);
                } else {
                    m = minimal_period_affine(coords, F, pt, n);
                }
                if (m > 0) {
                    PeriodicPoint pp;
                    pp.ext_degree = j;
                    pp.coords = std::move(pt);
                    pp.minimal_period = m;
                    out.push_back(std::move(pp));
                }
            }
            // Odometer over the b coordinates.
            done = true;
            for (int i = 0; i < b; ++i) {
                if (++idx[static_cast<size_t>(i)] < field_size) { done = false; break; }
                idx[static_cast<size_t>(i)] = 0;
            }
        }
    }
    return out;
}

// --- cycles over F_q -------------------------------------------------------------

namespace {

std::string ambient_name(const PolyMap& map) {
    if (map.model() == PolyMap::Model::Projective) return "P^1";
    return "A^" + std::to_string(map.dimension());
}

// Multiplicities a_P(d) for every divisor level, for each enumerated point.
struct GFCycleData {
    std::vector<PeriodicPoint> points;
    std::map<long, std::map<size_t, long>> mult; // level -> point index -> a_P(level)
};

GFCycleData gf_cycle_data(const PolyMap& map, long n, int k_max) {
    GFCycleData data;
    data.points = enumerate_periodic(map, n, k_max);
    const auto levels = divisors(n).divisors;

    if (map.model() == PolyMap::Model::Affine && map.dimension() == 1) {
        UniEngineGF eng(to_gfpoly(map.coords()[0]));
        for (auto d : levels) {
            for (size_t i = 0; i < data.points.size(); ++i) {
                const auto& pp = data.points[i];
                if (d % pp.minimal_period != 0) { data.mult[d][i] = 0; continue; }
                data.mult[d][i] = eng.mult_at(d, pp.coords[0], pp.ext_degree);
            }
        }
        return data;
    }

    if (map.model() == PolyMap::Model::Projective) {
        ProjEngine eng(map);
        GFMapContext ctx;
        ctx.map = &map;
        ctx.base = map.field().gf();
        ctx.base_k = ctx.base->k();
        ctx.p = ctx.base->p();
        std::map<std::pair<long, int>, GFPoly> lifted;
        auto chart_poly = [&](long d, int j) -> const GFPoly& {
            auto key = std::make_pair(d, j);
            auto it = lifted.find(key);
            if (it != lifted.end()) return it->second;
            GFPoly h = to_gfpoly(eng.affine_periodic(d));
            if (j > 1) h = gfp::lift(h, ctx.context(j));
            return lifted.emplace(key, std::move(h)).first->second;
        };
        for (auto d : levels) {
            for (size_t i = 0; i < data.points.size(); ++i) {
                const auto& pp = data.points[i];
                if (d % pp.minimal_period != 0) { data.mult[d][i] = 0; continue; }
                if (pp.at_infinity) {
                    data.mult[d][i] = eng.infinity_mult(d);
                } else {
                    data.mult[d][i] = gfp::order_at(chart_poly(d, pp.ext_degree), pp.coords[0]);
                }
            }
        }
        return data;
    }

    // Multivariate affine: colength engine over the point's field.
    GFMapContext ctx;
    ctx.map = &map;
    ctx.base = map.field().gf();
    ctx.base_k = ctx.base->k();
    ctx.p = ctx.base->p();
    for (auto d : levels) {
        for (size_t i = 0; i < data.points.size(); ++i) {
            const auto& pp = data.points[i];
            if (d % pp.minimal_period != 0) { data.mult[d][i] = 0; continue; }
            const GFPtr& F = ctx.context(pp.ext_degree);
            Field f = Field::GF(F);
            PolyMap lifted_map = PolyMap::affine(ctx.coords(pp.ext_degree));
            std::vector<FieldElement> P;
            P.reserve(pp.coords.size());
            for (const auto& e : pp.coords) P.push_back(FieldElement::of(f, e));
            ColengthReport rep = intersection_multiplicity(lifted_map, d, P);
            if (rep.status == ColengthReport::Status::Degenerate ||
                rep.status == ColengthReport::Status::Inconclusive) {
                throw DegeneracyError("colength screening at enumerated point " +
                                      AlgebraicPoint::finite_field(pp.ext_degree, pp.coords).to_string());
            }
            data.mult[d][i] = rep.value;
        }
    }
    return data;
}

AlgebraicPoint point_key(const PeriodicPoint& pp) {
    if (pp.at_infinity) return AlgebraicPoint::infinity();
    return AlgebraicPoint::finite_field(pp.ext_degree, pp.coords);
}

} // namespace

ZeroCycle build_cycle(const PolyMap& map, long n, int k_max) {
    require_gf(map);
    GFCycleData data = gf_cycle_data(map, n, k_max);
    ZeroCycle cyc;
    cyc.field = map.field().name();
    cyc.ambient = ambient_name(map);
    cyc.ext_cap = k_max;
    for (size_t i = 0; i < data.points.size(); ++i) {
        cyc.add(point_key(data.points[i]), data.mult[n][i]);
    }
    return cyc;
}

ZeroCycle build_dynatomic_cycle(const PolyMap& map, long n, int k_max) {
    require_gf(map);
    GFCycleData data = gf_cycle_data(map, n, k_max);
    ZeroCycle cyc;
    cyc.field = map.field().name();
    cyc.ambient = ambient_name(map);
    cyc.ext_cap = k_max;
    for (size_t i = 0; i < data.points.size(); ++i) {
        long a_star = 0;
        for (auto d : divisors(n).divisors) a_star += mobius(n / d) * data.mult[d][i];
        cyc.add(point_key(data.points[i]), a_star);
    }
    return cyc;
}

// --- cycles over Q -----------------------------------------------------------------

namespace {

void require_uni_q(const PolyMap& map) {
    if (map.field().kind() != FieldKind::Rationals || map.model() != PolyMap::Model::Affine ||
        map.dimension() != 1) {
        throw std::invalid_argument("expected a univariate affine map over Q");
    }
}

// Cells -> cycle entries, splitting off rational points when the exact root
// search is feasible.
void add_cell(ZeroCycle& cyc, const QPoly& factor, long mult) {
    if (mult == 0) return;
    QPoly rest = factor;
    try {
        for (const auto& [root, ord] : qp::rational_roots(factor)) {
            cyc.add(AlgebraicPoint::rational({root}), mult); // ord == 1: factor squarefree
            QPoly q;
            QPoly lin{-root, Rational(1)};
            if (qp::exact_divide(rest, lin, q)) rest = std::move(q);
        }
    } catch (const std::overflow_error&) {
        // Root enumeration infeasible; keep the whole factor as one orbit.
        rest = factor;
    }
    if (qp::deg(rest) >= 1) cyc.add(AlgebraicPoint::orbit(rest), mult);
}

} // namespace

ZeroCycle build_cycle(const PolyMap& map, long n) {
    require_uni_q(map);
    UniEngineQ eng(to_qpoly(map.coords()[0]));
    ZeroCycle cyc;
    cyc.field = "Q";
    cyc.ambient = "A^1";
    for (const auto& cell : eng.cells(divisors(n).divisors)) {
        add_cell(cyc, cell.factor, cell.a.at(n));
    }
    return cyc;
}

ZeroCycle build_dynatomic_cycle(const PolyMap& map, long n) {
    require_uni_q(map);
    UniEngineQ eng(to_qpoly(map.coords()[0]));
    ZeroCycle cyc;
    cyc.field = "Q";
    cyc.ambient = "A^1";
    for (const auto& cell : eng.cells(divisors(n).divisors)) {
        add_cell(cyc, cell.factor, cell.a_star(n));
    }
    return cyc;
}

ZeroCycle build_cycle(const PolyMap& map, long n,
                      const std::vector<std::vector<Rational>>& candidates) {
    if (map.field().kind() != FieldKind::Rationals) {
        throw std::invalid_argument("candidate-point cycles: map must be over Q");
    }
    check_multivariate_degeneracy(map, n);
    ZeroCycle cyc;
    cyc.field = "Q";
    cyc.ambient = ambient_name(map);
    for (const auto& cand : candidates) {
        std::vector<FieldElement> P;
        for (const auto& c : cand) P.push_back(FieldElement::of(c));
        ColengthReport rep = intersection_multiplicity(map, n, P);
        if (!rep.finite()) {
            throw DegeneracyError("colength screening at candidate point");
        }
        cyc.add(AlgebraicPoint::rational(cand), rep.value);
    }
    return cyc;
}

ZeroCycle build_dynatomic_cycle(const PolyMap& map, long n,
                                const std::vector<std::vector<Rational>>& candidates) {
    if (map.field().kind() != FieldKind::Rationals) {
        throw std::invalid_argument("candidate-point cycles: map must be over Q");
    }
    check_multivariate_degeneracy(map, n);
    ZeroCycle cyc;
    cyc.field = "Q";
    cyc.ambient = ambient_name(map);
    for (const auto& cand : candidates) {
        std::vector<FieldElement> P;
        for (const auto& c : cand) P.push_back(FieldElement::of(c));
        ColengthReport rep = formal_intersection_multiplicity(map, n, P);
        if (!rep.finite()) {
            throw DegeneracyError("colength screening at candidate point");
        }
        cyc.add(AlgebraicPoint::rational(cand), rep.value);
    }
    return cyc;
}

} // namespace dynatomic
