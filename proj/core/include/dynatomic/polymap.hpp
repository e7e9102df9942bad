#ifndef DYNATOMIC_POLYMAP_HPP
#define DYNATOMIC_POLYMAP_HPP

// Polynomial self-maps: affine systems on A^b (b coordinate polynomials in
// b variables) and morphisms of P^1 given by a homogeneous pair [F : G] of
// equal degree with nonzero resultant.

#include "dynatomic/poly.hpp"

#include <vector>

namespace dynatomic {

class PolyMap {
public:
    enum class Model { Affine, Projective };

    static PolyMap affine(std::vector<Poly> coords);
    // Validates homogeneity, equal degrees >= 1, and the morphism condition
    // Res(F, G) != 0.
    static PolyMap projective(Poly F, Poly G);

    Model model() const { return model_; }
    const Field& field() const { return field_; }
    int dimension() const; // b for affine, 1 for P^1
    const std::vector<Poly>& coords() const { return coords_; }
    std::int64_t degree() const;
    bool is_identity() const;

private:
    PolyMap(Model m, Field f, std::vector<Poly> coords)
        : model_(m), field_(std::move(f)), coords_(std::move(coords)) {}
    Model model_;
    Field field_;
    std::vector<Poly> coords_; // affine: b entries; projective: {F, G}
};

// n-fold composition, n >= 1. Deform-then-iterate order is the caller's
// concern; this is plain composition of whatever map it is given.
PolyMap iterate(const PolyMap& map, long n);

// psi with psi(x) = phi(x + P) - P, so P is a fixed point of phi iff
// psi(0) = 0. Affine maps only.
PolyMap shift_origin(const PolyMap& map, const std::vector<FieldElement>& P);

// Coefficientwise t = t0 on every coordinate (map over Q(t) -> map over Q).
PolyMap specialize_parameter(const PolyMap& map, const Rational& t0);

// Homogeneous resultant of a projective pair via the Sylvester determinant.
FieldElement homogeneous_resultant(const Poly& F, const Poly& G);

} // namespace dynatomic

#endif
