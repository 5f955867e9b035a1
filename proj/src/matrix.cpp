#include "hqm/matrix.hpp"

namespace hqm {

Rational determinant(RMatrix m) {
    const std::size_t n = m.dim();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m(r, col)) == 0) continue;
            const Rational f = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

} // namespace hqm
