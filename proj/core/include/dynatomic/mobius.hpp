#ifndef DYNATOMIC_MOBIUS_HPP
#define DYNATOMIC_MOBIUS_HPP

#include <cstdint>
#include <vector>

namespace dynatomic {

// All positive divisors of n, sorted ascending. 1 and n are always present.
struct DivisorList {
    std::int64_t n = 0;
    std::vector<std::int64_t> divisors;
};

// mu(1) = 1, mu(n) = (-1)^omega for squarefree n with omega prime factors,
// 0 otherwise. Throws std::invalid_argument for n < 1.
int mobius(std::int64_t n);

// Throws std::invalid_argument for n < 1. Trial division; inputs are desk-scale.
DivisorList divisors(std::int64_t n);

} // namespace dynatomic

#endif
