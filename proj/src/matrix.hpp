#ifndef NETPERTURB_MATRIX_HPP
#define NETPERTURB_MATRIX_HPP

#include <vector>

namespace netperturb {

// Minimal dense square matrix, row-major.
class dense_matrix {
  public:
    dense_matrix() = default;
    explicit dense_matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    double at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const std::vector<double>& data() const { return a_; }

    static dense_matrix identity(int n);
    dense_matrix operator*(const dense_matrix& rhs) const;
    double inf_norm() const; // max absolute row sum

  private:
    int n_ = 0;
    std::vector<double> a_;
};

// exp(M) by scaling-and-squaring with a truncated Taylor kernel: the input is
// scaled by 2^-s until its norm is small, the series is summed to machine
// precision, and the result squared s times.
dense_matrix matrix_exponential(const dense_matrix& m);

} // namespace netperturb

#endif
