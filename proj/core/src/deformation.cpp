#include "dynatomic/deformation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dynatomic {

DeformedMap deform(const PolyMap& map) {
    if (map.model() != PolyMap::Model::Affine) {
        throw std::invalid_argument("deform: affine maps only");
    }
    if (map.field().kind() != FieldKind::Rationals) {
        throw std::invalid_argument("deform: base map must be over Q");
    }
    Field qt = Field::Qt();
    const int b = map.dimension();
    Poly t_const = Poly::constant(qt, b, FieldElement::of(rf::from_poly(QPoly{Rational(0), Rational(1)})));
    std::vector<Poly> coords;
    coords.reserve(static_cast<size_t>(b));
    for (const auto& c : map.coords()) {
        Poly lifted(qt, b);
        for (const auto& [m, coef] : c.terms()) {
            lifted.add_term(m, FieldElement::of(rf::from_rational(coef.rational())));
        }
        coords.push_back(lifted + t_const);
    }
    return DeformedMap{map, PolyMap::affine(std::move(coords))};
}

namespace {

void require_uni(const DeformedMap& dmap) {
    if (dmap.base.dimension() != 1) {
        throw std::invalid_argument("deformation: univariate operation on a multivariate family");
    }
}

// x-coefficients of a univariate polynomial over Q(t), as polynomials in t.
// Every coefficient of a deformed iterate is a genuine t-polynomial.
std::vector<QPoly> t_coefficient_rows(const Poly& f) {
    std::vector<QPoly> rows(static_cast<size_t>(f.total_degree() + 1));
    for (const auto& [m, c] : f.terms()) {
        const RatFunc& r = c.rat_func();
        if (!r.is_polynomial()) {
            throw InternalConsistencyError("deformed iterate has a non-polynomial t-coefficient");
        }
        rows[static_cast<size_t>(m.e[0])] = r.num;
    }
    return rows;
}

// Fraction-free Bareiss determinant over Q[t]; divisions are exact by
// Sylvester's identity.
QPoly bareiss_determinant(std::vector<std::vector<QPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return QPoly{Rational(1)};
    int sign = 1;
    QPoly prev{Rational(1)};
    for (size_t k = 0; k + 1 < n; ++k) {
        if (qp::is_zero(m[k][k])) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i) {
                if (!qp::is_zero(m[i][k])) { swap_row = i; break; }
            }
            if (swap_row == k) return QPoly{}; // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                QPoly num = qp::sub(qp::mul(m[k][k], m[i][j]), qp::mul(m[i][k], m[k][j]));
                QPoly q;
                if (!qp::exact_divide(num, prev, q)) {
                    throw InternalConsistencyError("Bareiss division left a remainder");
                }
                m[i][j] = std::move(q);
            }
            m[i][k] = QPoly{};
        }
        prev = m[k][k];
    }
    QPoly det = m[n - 1][n - 1];
    if (sign < 0) det = qp::neg(det);
    return det;
}

// Res_x(f, df/dx) for f given by t-polynomial coefficient rows.
QPoly discriminant_resultant_in_t(const std::vector<QPoly>& coeffs) {
    const long dx = static_cast<long>(coeffs.size()) - 1;
    std::vector<QPoly> deriv(static_cast<size_t>(dx));
    for (long i = 1; i <= dx; ++i) {
        deriv[static_cast<size_t>(i - 1)] = qp::scale(coeffs[static_cast<size_t>(i)], Rational(i));
    }
    const long dy = dx - 1;
    const size_t n = static_cast<size_t>(dx + dy);
    std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n, QPoly{}));
    for (long row = 0; row < dy; ++row) {
        for (long i = 0; i <= dx; ++i) {
            m[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = coeffs[static_cast<size_t>(dx - i)];
        }
    }
    for (long row = 0; row < dx; ++row) {
        for (long i = 0; i <= dy; ++i) {
            m[static_cast<size_t>(dy + row)][static_cast<size_t>(row + i)] = deriv[static_cast<size_t>(dy - i)];
        }
    }
    return bareiss_determinant(std::move(m));
}

} // namespace

Poly deformed_periodic_poly(const DeformedMap& dmap, long n) {
    require_uni(dmap);
    PolyMap it = iterate(dmap.deformed, n);
    Poly x = Poly::variable(Field::Qt(), 1, 0);
    return it.coords()[0] - x;
}

ParameterLocus degenerate_parameter_locus(const DeformedMap& dmap, long n) {
    require_uni(dmap);
    Poly f = deformed_periodic_poly(dmap, n);
    if (f.is_zero() || f.total_degree() < 1) {
        throw DegeneracyError("deformed family has no x-dependence at n = " + std::to_string(n));
    }
    QPoly disc = discriminant_resultant_in_t(t_coefficient_rows(f));
    if (qp::is_zero(disc)) {
        throw DegeneracyError("identically vanishing t-discriminant (degenerate family)");
    }
    ParameterLocus out;
    if (qp::deg(disc) == 0) {
        out.squarefree_t_poly = QPoly{Rational(1)};
        return out; // no bad parameters at all
    }
    out.squarefree_t_poly = qp::squarefree_part(disc);
    try {
        for (const auto& [root, mult] : qp::rational_roots(out.squarefree_t_poly)) {
            out.rational_points.push_back(root);
        }
    } catch (const std::overflow_error&) {
        out.roots_complete = false;
    }
    return out;
}

bool simple_at(const DeformedMap& dmap, long n, const Rational& t0) {
    require_uni(dmap);
    Poly ft = deformed_periodic_poly(dmap, n);
    QPoly f0 = to_qpoly(specialize_parameter(ft, t0));
    if (qp::deg(f0) != ft.total_degree()) return false;
    if (qp::deg(f0) < 1) return false;
    return qp::deg(qp::gcd(f0, qp::derivative(f0))) == 0;
}

SimplicityCheck generic_simplicity_check(const DeformedMap& dmap, long n, long samples,
                                         std::uint64_t seed) {
    require_uni(dmap);
    ParameterLocus locus = degenerate_parameter_locus(dmap, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numden(1, 1000), coin(0, 1);
    SimplicityCheck out;
    for (long s = 0; s < samples; ++s) {
        Rational t0;
        int rejections = 0;
        while (true) {
            t0 = Rational(numden(rng), numden(rng));
            if (coin(rng)) t0 = -t0;
            if (qp::eval(locus.squarefree_t_poly, t0) != 0) break;
            if (++rejections >= 100) {
                throw std::runtime_error("generic_simplicity_check: sampling exhausted against the locus");
            }
        }
        out.sampled_t.push_back(t0);
        if (!simple_at(dmap, n, t0)) {
            out.ok = false;
            out.counterexamples.push_back(t0);
        }
    }
    return out;
}

bool degree_conservation_check(const DeformedMap& dmap, long n) {
    require_uni(dmap);
    Poly f = deformed_periodic_poly(dmap, n);
    if (f.is_zero()) return false;
    auto rows = t_coefficient_rows(f);
    const QPoly& lead = rows.back();
    return qp::deg(lead) == 0 && !qp::is_zero(lead);
}

ClusterReport flat_limit_clusters(const DeformedMap& dmap, long n,
                                  const std::vector<Rational>& t_sequence, int precision) {
    require_uni(dmap);
    if (t_sequence.empty()) throw std::invalid_argument("flat_limit_clusters: empty t-sequence");
    for (size_t i = 0; i + 1 < t_sequence.size(); ++i) {
        if (!(abs(t_sequence[i + 1]) < abs(t_sequence[i]))) {
            throw std::invalid_argument("flat_limit_clusters: |t_k| must strictly decrease");
        }
    }
    if (t_sequence.back() == 0) throw std::invalid_argument("flat_limit_clusters: t_k must be nonzero");
    ParameterLocus locus = degenerate_parameter_locus(dmap, n);
    for (const auto& t0 : t_sequence) {
        if (qp::eval(locus.squarefree_t_poly, t0) == 0) {
            throw std::invalid_argument("flat_limit_clusters: t-sequence touches the degenerate locus");
        }
    }

    ClusterReport rep;
    rep.t_sequence = t_sequence;

    // Exact side: orbit cells of the undeformed map give the cluster centers
    // with their multiplicity tables.
    UniEngineQ eng(to_qpoly(dmap.base.coords()[0]));
    std::vector<Cluster> clusters;
    for (const auto& cell : eng.cells(divisors(n).divisors)) {
        if (cell.a.at(n) == 0) continue; // not in the period-n support
        auto roots = all_roots(cell.factor, precision);
        if (!roots) {
            rep.diagnostic = "root refinement did not converge on an orbit cell";
            return rep;
        }
        for (const auto& r : *roots) {
            Cluster c;
            c.center = r;
            c.cell_factor = cell.factor;
            c.exact_a = cell.a.at(n);
            c.exact_a_star = cell.a_star(n);
            clusters.push_back(std::move(c));
        }
    }
    if (clusters.empty()) {
        rep.diagnostic = "empty period-n support";
        return rep;
    }

    // c = half the minimal pairwise distance of the undeformed support.
    BigFloat cscale = 1;
    if (clusters.size() > 1) {
        BigFloat minsep = -1;
        for (size_t i = 0; i < clusters.size(); ++i) {
            for (size_t j = i + 1; j < clusters.size(); ++j) {
                BigFloat d = (clusters[i].center - clusters[j].center).abs();
                if (minsep < 0 || d < minsep) minsep = d;
            }
        }
        cscale = minsep / 2;
    }

    const Poly ft = deformed_periodic_poly(dmap, n);
    const BigFloat period_tol = pow(BigFloat(10), -(precision / 2));
    const auto divs = divisors(n).divisors;

    for (size_t k = 0; k < t_sequence.size(); ++k) {
        const Rational& tk = t_sequence[k];
        QPoly fk = to_qpoly(specialize_parameter(ft, tk));
        if (qp::deg(fk) != ft.total_degree()) {
            rep.diagnostic = "degree dropped under specialization (flatness violated)";
            return rep;
        }
        auto roots = all_roots(fk, precision);
        if (!roots) {
            rep.diagnostic = "root refinement did not converge at t_k = " + to_string(tk);
            return rep;
        }
        // Assign each root to the nearest center, within c * |t_k|^(1/M).
        std::vector<long> counts(clusters.size(), 0);
        std::vector<std::vector<Complex>> members(clusters.size());
        BigFloat abst = to_bigfloat(abs(tk));
        for (const auto& r : *roots) {
            size_t best = 0;
            BigFloat bestd = -1;
            for (size_t ci = 0; ci < clusters.size(); ++ci) {
                BigFloat d = (r - clusters[ci].center).abs();
                if (bestd < 0 || d < bestd) { bestd = d; best = ci; }
            }
            BigFloat threshold =
                cscale * pow(abst, BigFloat(1) / static_cast<int>(clusters[best].exact_a));
            if (bestd >= threshold) {
                rep.diagnostic = "root outside every cluster threshold at t_k = " + to_string(tk);
                return rep;
            }
            ++counts[best];
            members[best].push_back(r);
        }
        long total = 0;
        for (auto c : counts) total += c;
        if (total != static_cast<long>(roots->size())) {
            throw InternalConsistencyError("cluster assignment lost a root");
        }
        for (size_t ci = 0; ci < clusters.size(); ++ci) {
            clusters[ci].member_counts.push_back(counts[ci]);
        }

        // At the smallest t_k: period tags, residual and ambiguity control.
        if (k + 1 == t_sequence.size()) {
            QPoly phik = to_qpoly(specialize_parameter(dmap.deformed.coords()[0], tk));
            BigFloat max_radius = 0;
            for (size_t ci = 0; ci < clusters.size(); ++ci) {
                for (const auto& r : members[ci]) {
                    BigFloat d = (r - clusters[ci].center).abs();
                    if (d > max_radius) max_radius = d;
                    ClusterMember cm;
                    cm.position = r;
                    // Minimal d | n with |phi^d(r) - r| below the orbit tolerance.
                    Complex orbit = r;
                    long tag = 0;
                    for (long step = 1; step <= n; ++step) {
                        orbit = eval_complex(phik, orbit);
                        if ((orbit - r).abs() < period_tol) { tag = step; break; }
                    }
                    if (tag == 0 || n % tag != 0) {
                        rep.diagnostic = "period tag ambiguous at the smallest t_k";
                        return rep;
                    }
                    cm.period_tag = tag;
                    clusters[ci].members.push_back(std::move(cm));
                }
            }
            rep.residual = max_radius;
            if (clusters.size() > 1 && cscale * 2 < 4 * max_radius) {
                rep.diagnostic = "clusters closer than four cluster radii (ambiguous)";
                return rep;
            }
        }
    }

    // Reconstruction: member counts give a_P(n); period-n tags give a*_P(n)
    // because every member is simple at generic t (a_{P_j}(d) is 0 or 1, so
    // the Mobius sum collapses to [minimal period == n]).
    rep.conservation_ok = true;
    rep.counts_match = true;
    rep.tags_match = true;
    const long deg_total = static_cast<long>(ft.total_degree());
    for (size_t k = 0; k < t_sequence.size(); ++k) {
        long sum = 0;
        for (const auto& c : clusters) sum += c.member_counts[k];
        if (sum != deg_total) rep.conservation_ok = false;
    }
    for (auto& c : clusters) {
        c.reconstructed_a = c.member_counts.back();
        c.reconstructed_a_star = 0;
        for (const auto& mem : c.members) {
            if (mem.period_tag == n) ++c.reconstructed_a_star;
        }
        bool counts_stable = std::all_of(c.member_counts.begin(), c.member_counts.end(),
                                         [&](long v) { return v == c.member_counts.front(); });
        if (!counts_stable) {
            rep.diagnostic = "cluster member count varies along the t-sequence";
            rep.counts_match = false;
        }
        if (c.reconstructed_a != c.exact_a) rep.counts_match = false;
        if (c.reconstructed_a_star != c.exact_a_star) rep.tags_match = false;
    }
    rep.clusters = std::move(clusters);
    rep.status = (rep.conservation_ok && rep.counts_match && rep.tags_match)
                     ? ClusterReport::Status::Ok
                     : ClusterReport::Status::Inconclusive;
    if (rep.status == ClusterReport::Status::Inconclusive && rep.diagnostic.empty()) {
        rep.diagnostic = "reconstructed multiplicities disagree with the exact engine";
    }
    return rep;
}

} // namespace dynatomic
