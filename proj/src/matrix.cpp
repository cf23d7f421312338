#include "matrix.hpp"

#include <cmath>

#include "errors.hpp"

namespace netperturb {

dense_matrix dense_matrix::identity(int n) {
    dense_matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

dense_matrix dense_matrix::operator*(const dense_matrix& rhs) const {
    dense_matrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            double aik = at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    }
    return out;
}

double dense_matrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) row += std::abs(at(i, j));
        best = std::max(best, row);
    }
    return best;
}

dense_matrix matrix_exponential(const dense_matrix& m) {
    const int n = m.size();
    if (n == 0) return m;

    int squarings = 0;
    double norm = m.inf_norm();
    while (norm > 0.25 && squarings < 64) {
        norm /= 2.0;
        ++squarings;
    }
    double scale = std::ldexp(1.0, -squarings);

    dense_matrix scaled(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled.at(i, j) = m.at(i, j) * scale;

    // Taylor series of the scaled matrix; with norm <= 0.25 the terms decay
    // fast enough that 30 terms are far below double precision.
    dense_matrix result = dense_matrix::identity(n);
    dense_matrix term = dense_matrix::identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = term * scaled;
        double inv = 1.0 / k;
        double largest = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double t = term.at(i, j) * inv;
                term.at(i, j) = t;
                result.at(i, j) += t;
                largest = std::max(largest, std::abs(t));
            }
        if (largest < 1e-18) break;
        if (k == 30 && largest > 1e-14)
            throw numeric_error("matrix_exponential: Taylor kernel failed to converge");
    }

    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

} // namespace netperturb
