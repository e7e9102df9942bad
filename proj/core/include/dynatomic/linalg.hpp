#ifndef DYNATOMIC_LINALG_HPP
#define DYNATOMIC_LINALG_HPP

// Exact dense linear algebra over a FieldElement field. Plain Gaussian
// elimination; all arithmetic is exact, pivots chosen by smallest printed
// size to keep rational entries tame.

#include "dynatomic/field.hpp"

#include <vector>

namespace dynatomic {

using Matrix = std::vector<std::vector<FieldElement>>;

long rank(Matrix m);
FieldElement determinant(Matrix m, const Field& f); // square input

} // namespace dynatomic

#endif
