#include "dynatomic/mobius.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynatomic {

int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: argument must be a positive integer");
    int omega = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0; // p^2 | n
        ++omega;
    }
    if (n > 1) ++omega;
    return (omega % 2 == 0) ? 1 : -1;
}

DivisorList divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: argument must be a positive integer");
    DivisorList out;
    out.n = n;
    std::vector<std::int64_t> high;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.divisors.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    out.divisors.insert(out.divisors.end(), high.rbegin(), high.rend());
    return out;
}

} // namespace dynatomic
