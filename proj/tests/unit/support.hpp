#pragma once

#include "entlab/matrix.hpp"
#include "entlab/random.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace entlab::testing {

inline ComplexMatrix random_hermitian(std::size_t d, Rng &rng) {
    ComplexMatrix m(d, d);
    for(std::size_t i = 0; i < d; ++i) {
        m(i, i) = rng.normal();
        for(std::size_t j = i + 1; j < d; ++j) {
            m(i, j) = Complex(rng.normal(), rng.normal());
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

inline ComplexMatrix random_general(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for(std::size_t i = 0; i < rows; ++i)
        for(std::size_t j = 0; j < cols; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
    return m;
}

inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    double worst = 0.0;
    for(std::size_t i = 0; i < a.entries().size(); ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double worst = 0.0;
    for(std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace entlab::testing
