#include "dynatomic/polymap.hpp"

#include "dynatomic/linalg.hpp"

#include <stdexcept>

namespace dynatomic {

namespace {

// Coefficient of x^i y^(d-i) for i = 0..d.
std::vector<FieldElement> homogeneous_coeffs(const Poly& F, std::int64_t d) {
    std::vector<FieldElement> out(static_cast<size_t>(d + 1), FieldElement::zero(F.field()));
    for (const auto& [m, c] : F.terms()) out[static_cast<size_t>(m.e[0])] = c;
    return out;
}

} // namespace

FieldElement homogeneous_resultant(const Poly& F, const Poly& G) {
    if (F.nvars() != 2 || G.nvars() != 2) throw std::invalid_argument("resultant: expected binary forms");
    std::int64_t d = F.total_degree(), e = G.total_degree();
    if (d < 1 || e < 1) throw std::invalid_argument("resultant: forms must have degree >= 1");
    auto a = homogeneous_coeffs(F, d);
    auto b = homogeneous_coeffs(G, e);
    const Field& f = F.field();
    // Sylvester matrix of the full coefficient vectors (zero leading
    // coefficients included, so degree drops need no special casing).
    size_t n = static_cast<size_t>(d + e);
    Matrix m(n, std::vector<FieldElement>(n, FieldElement::zero(f)));
    for (std::int64_t row = 0; row < e; ++row) {
        for (std::int64_t i = 0; i <= d; ++i) {
            m[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = a[static_cast<size_t>(d - i)];
        }
    }
    for (std::int64_t row = 0; row < d; ++row) {
        for (std::int64_t i = 0; i <= e; ++i) {
            m[static_cast<size_t>(e + row)][static_cast<size_t>(row + i)] = b[static_cast<size_t>(e - i)];
        }
    }
    return determinant(std::move(m), f);
}

PolyMap PolyMap::affine(std::vector<Poly> coords) {
    if (coords.empty()) throw std::invalid_argument("PolyMap: no coordinates");
    const Field f = coords[0].field();
    const int b = static_cast<int>(coords.size());
    for (const auto& c : coords) {
        if (c.field() != f) throw std::invalid_argument("PolyMap: mixed coefficient fields");
        if (c.nvars() != b) throw std::invalid_argument("PolyMap: coordinate count must equal variable count");
    }
    return PolyMap(Model::Affine, f, std::move(coords));
}

PolyMap PolyMap::projective(Poly F, Poly G) {
    if (F.nvars() != 2 || G.nvars() != 2) {
        throw std::invalid_argument("PolyMap: projective model needs binary forms");
    }
    if (F.field() != G.field()) throw std::invalid_argument("PolyMap: mixed coefficient fields");
    if (!F.is_homogeneous() || !G.is_homogeneous()) {
        throw std::invalid_argument("PolyMap: projective coordinates must be homogeneous");
    }
    if (F.total_degree() != G.total_degree() || F.total_degree() < 1) {
        throw std::invalid_argument("PolyMap: projective coordinates must share a degree >= 1");
    }
    if (homogeneous_resultant(F, G).is_zero()) {
        throw std::invalid_argument("PolyMap: [F : G] has vanishing resultant (not a morphism of P^1)");
    }
    Field f = F.field();
    std::vector<Poly> coords;
    coords.push_back(std::move(F));
    coords.push_back(std::move(G));
    return PolyMap(Model::Projective, std::move(f), std::move(coords));
}

int PolyMap::dimension() const {
    return model_ == Model::Affine ? static_cast<int>(coords_.size()) : 1;
}

std::int64_t PolyMap::degree() const {
    if (model_ == Model::Projective) return coords_[0].total_degree();
    std::int64_t d = 0;
    for (const auto& c : coords_) d = std::max(d, c.total_degree());
    return d;
}

bool PolyMap::is_identity() const {
    if (model_ != Model::Affine) return false;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != Poly::variable(field_, static_cast<int>(coords_.size()), static_cast<int>(i))) {
            return false;
        }
    }
    return true;
}

PolyMap iterate(const PolyMap& map, long n) {
    if (n < 1) throw std::invalid_argument("iterate: n must be >= 1");
    if (n == 1) return map;

    if (map.model() == PolyMap::Model::Affine && map.dimension() == 1) {
        // Dense fast paths for the univariate compositions.
        if (map.field().kind() == FieldKind::Rationals) {
            QPoly phi = to_qpoly(map.coords()[0]);
            QPoly acc = phi;
            for (long i = 1; i < n; ++i) acc = qp::compose(phi, acc);
            return PolyMap::affine({from_qpoly(acc)});
        }
        if (map.field().kind() == FieldKind::Finite) {
            GFPoly phi = to_gfpoly(map.coords()[0]);
            GFPoly acc = phi;
            for (long i = 1; i < n; ++i) acc = gfp::compose(phi, acc);
            return PolyMap::affine({from_gfpoly(acc)});
        }
    }

    std::vector<Poly> acc = map.coords();
    for (long i = 1; i < n; ++i) {
        std::vector<Poly> next;
        next.reserve(map.coords().size());
        for (const auto& c : map.coords()) next.push_back(c.substitute(acc));
        acc = std::move(next);
    }
    if (map.model() == PolyMap::Model::Projective) return PolyMap::projective(acc[0], acc[1]);
    return PolyMap::affine(std::move(acc));
}

PolyMap shift_origin(const PolyMap& map, const std::vector<FieldElement>& P) {
    if (map.model() != PolyMap::Model::Affine) {
        throw std::invalid_argument("shift_origin: affine maps only");
    }
    if (static_cast<int>(P.size()) != map.dimension()) {
        throw std::invalid_argument("shift_origin: point dimension mismatch");
    }
    std::vector<Poly> out;
    out.reserve(P.size());
    for (size_t i = 0; i < P.size(); ++i) {
        Poly shifted = map.coords()[i].shift(P);
        out.push_back(shifted - Poly::constant(map.field(), map.dimension(), P[i]));
    }
    return PolyMap::affine(std::move(out));
}

PolyMap specialize_parameter(const PolyMap& map, const Rational& t0) {
    std::vector<Poly> out;
    out.reserve(map.coords().size());
    for (const auto& c : map.coords()) out.push_back(specialize_parameter(c, t0));
    if (map.model() == PolyMap::Model::Projective) return PolyMap::projective(out[0], out[1]);
    return PolyMap::affine(std::move(out));
}

} // namespace dynatomic
