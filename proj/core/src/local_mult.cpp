#include "dynatomic/local_mult.hpp"

#include "dynatomic/linalg.hpp"
#include "dynatomic/mobius.hpp"

#include <map>
#include <stdexcept>

namespace dynatomic {

namespace {

void require_affine(const PolyMap& map) {
    if (map.model() != PolyMap::Model::Affine) {
        throw std::invalid_argument("local multiplicities: affine maps only");
    }
}

// Monomials of total degree < D in b variables, graded-lex order.
std::vector<Monomial> monomial_basis(int b, long D) {
    std::vector<Monomial> out;
    for (long total = 0; total < D; ++total) {
        // Generate compositions of `total` into b parts.
        std::vector<std::int64_t> comp(b, 0);
        comp[0] = total;
        while (true) {
            out.push_back(Monomial{comp});
            // Next composition in colex-ish order.
            int i = 0;
            while (i < b - 1 && comp[i] == 0) ++i;
            if (i == b - 1) break;
            comp[i + 1] += 1;
            std::int64_t head = comp[i] - 1;
            comp[i] = 0;
            comp[0] = head;
        }
    }
    return out;
}

std::int64_t order_of(const Poly& f) {
    std::int64_t o = -1;
    for (const auto& [m, c] : f.terms()) {
        std::int64_t d = m.total_degree();
        o = (o < 0) ? d : std::min(o, d);
    }
    return o; // -1 for zero
}

} // namespace

LocalSystem local_system(const PolyMap& map, long n, const std::vector<FieldElement>& P) {
    require_affine(map);
    if (static_cast<int>(P.size()) != map.dimension()) {
        throw std::invalid_argument("local_system: point dimension mismatch");
    }
    PolyMap phin = iterate(map, n);
    // Reject P not fixed by phi^n; nonperiodic points yield a_P(n) = 0 upstream.
    std::vector<FieldElement> image = apply_map(phin, P);
    for (size_t i = 0; i < P.size(); ++i) {
        if (image[i] != P[i]) {
            throw std::invalid_argument("local_system: point is not fixed by phi^n");
        }
    }
    PolyMap shifted = shift_origin(phin, P);
    LocalSystem sys;
    sys.dimension = map.dimension();
    for (int i = 0; i < sys.dimension; ++i) {
        Poly f = shifted.coords()[i] - Poly::variable(map.field(), sys.dimension, i);
        sys.generators.push_back(std::move(f));
    }
    return sys;
}

long truncated_quotient_dim(const LocalSystem& system, long D) {
    const int b = system.dimension;
    const Field& f = system.generators.at(0).field();
    auto basis = monomial_basis(b, D);
    std::map<std::vector<std::int64_t>, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].e, i);

    Matrix rows;
    for (const auto& gen : system.generators) {
        std::int64_t ord = order_of(gen);
        if (ord < 0) continue; // zero generator spans nothing
        for (const auto& alpha : monomial_basis(b, D - ord)) {
            std::vector<FieldElement> row(basis.size(), FieldElement::zero(f));
            bool any = false;
            for (const auto& [m, c] : gen.terms()) {
                Monomial shifted = monomial_mul(m, alpha);
                auto it = index.find(shifted.e);
                if (it == index.end()) continue; // degree >= D, truncated away
                row[it->second] = row[it->second] + c;
                any = true;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    long rk = rows.empty() ? 0 : rank(std::move(rows));
    return static_cast<long>(basis.size()) - rk;
}

ColengthReport colength(const LocalSystem& system, long bound) {
    if (bound < 1) throw std::invalid_argument("colength: bound must be >= 1");
    ColengthReport rep;
    rep.bound_used = bound;
    if (system.generators.empty()) throw std::invalid_argument("colength: empty system");
    for (const auto& gen : system.generators) {
        if (!gen.is_zero() && order_of(gen) == 0) {
            throw std::invalid_argument("colength: generator does not vanish at the origin");
        }
    }
    // A vanished generator leaves at most b-1 equations in b unknowns: the
    // local ring cannot be finite over K.
    for (const auto& gen : system.generators) {
        if (gen.is_zero()) {
            rep.status = ColengthReport::Status::Degenerate;
            return rep;
        }
    }
    long prev = truncated_quotient_dim(system, 1); // always 1
    for (long D = 1;; ++D) {
        long next = truncated_quotient_dim(system, D + 1);
        if (next == prev) {
            rep.status = ColengthReport::Status::Finite;
            rep.value = prev;
            rep.certified_at_degree = D;
            return rep;
        }
        if (next > bound) {
            rep.status = ColengthReport::Status::Inconclusive;
            rep.reached_degree = D + 1;
            return rep;
        }
        prev = next;
    }
}

std::vector<FieldElement> apply_map(const PolyMap& map, const std::vector<FieldElement>& P) {
    require_affine(map);
    std::vector<FieldElement> out;
    out.reserve(map.coords().size());
    for (const auto& c : map.coords()) out.push_back(c.eval(P));
    return out;
}

namespace {

long bezout_bound(const LocalSystem& sys) {
    long b = 1;
    for (const auto& gen : sys.generators) {
        std::int64_t d = gen.total_degree();
        if (d < 1) d = 1;
        if (b > 1000000 / d) return 1000000; // cap; only gates the loop
        b *= static_cast<long>(d);
    }
    return b;
}

} // namespace

ColengthReport intersection_multiplicity(const PolyMap& map, long n,
                                         const std::vector<FieldElement>& P, long bound) {
    require_affine(map);
    PolyMap phin = iterate(map, n);
    std::vector<FieldElement> image = apply_map(phin, P);
    if (image != P) {
        ColengthReport rep;
        rep.status = ColengthReport::Status::Finite;
        rep.value = 0;
        return rep;
    }
    LocalSystem sys = local_system(map, n, P);
    if (bound < 1) bound = bezout_bound(sys);
    return colength(sys, bound);
}

ColengthReport formal_intersection_multiplicity(const PolyMap& map, long n,
                                                const std::vector<FieldElement>& P, long bound) {
    ColengthReport out;
    long sum = 0;
    long cert = 0, used = 0;
    for (auto d : divisors(n).divisors) {
        ColengthReport r = intersection_multiplicity(map, d, P, bound);
        if (!r.finite()) return r; // Degenerate or Inconclusive propagates
        sum += mobius(n / d) * r.value;
        cert = std::max(cert, r.certified_at_degree);
        used = std::max(used, r.bound_used);
    }
    out.status = ColengthReport::Status::Finite;
    out.value = sum;
    out.certified_at_degree = cert;
    out.bound_used = used;
    return out;
}

std::pair<long, long> period_reduction(const PolyMap& map, long n,
                                       const std::vector<FieldElement>& P) {
    require_affine(map);
    std::vector<FieldElement> Q = P;
    for (long m = 1; m <= n; ++m) {
        Q = apply_map(map, Q);
        if (Q == P) {
            if (n % m != 0) {
                throw std::domain_error("period_reduction: minimal period " + std::to_string(m) +
                                        " does not divide n = " + std::to_string(n));
            }
            return {m, n / m};
        }
    }
    throw std::domain_error("period_reduction: point is not periodic within n iterates");
}

} // namespace dynatomic
