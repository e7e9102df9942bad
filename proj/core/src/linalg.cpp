#include "dynatomic/linalg.hpp"

#include <stdexcept>

namespace dynatomic {

namespace {

// Elimination below row/col (r, c); returns pivot row index or -1.
long find_pivot(const Matrix& m, size_t r, size_t c) {
    long best = -1;
    size_t best_size = 0;
    for (size_t i = r; i < m.size(); ++i) {
        if (m[i][c].is_zero()) continue;
        size_t sz = m[i][c].to_string().size();
        if (best < 0 || sz < best_size) {
            best = static_cast<long>(i);
            best_size = sz;
        }
    }
    return best;
}

} // namespace

long rank(Matrix m) {
    if (m.empty()) return 0;
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        long p = find_pivot(m, r, c);
        if (p < 0) continue;
        std::swap(m[r], m[static_cast<size_t>(p)]);
        FieldElement inv = m[r][c].inverse();
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            FieldElement factor = m[i][c] * inv;
            for (size_t j = c; j < cols; ++j) {
                m[i][j] = m[i][j] - factor * m[r][j];
            }
        }
        ++r;
    }
    return static_cast<long>(r);
}

FieldElement determinant(Matrix m, const Field& f) {
    const size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    }
    FieldElement det = FieldElement::one(f);
    for (size_t c = 0; c < n; ++c) {
        long p = find_pivot(m, c, c);
        if (p < 0) return FieldElement::zero(f);
        if (static_cast<size_t>(p) != c) {
            std::swap(m[c], m[static_cast<size_t>(p)]);
            det = -det;
        }
        det = det * m[c][c];
        FieldElement inv = m[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            FieldElement factor = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) {
                m[i][j] = m[i][j] - factor * m[c][j];
            }
        }
    }
    return det;
}

} // namespace dynatomic
