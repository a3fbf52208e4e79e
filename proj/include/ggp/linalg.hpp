#pragma once

#include "ggp/parallel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ggp {

/// Dense symmetric matrix, row-major storage of the full square.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static SymMatrix identity(std::size_t n);
  /// Throws std::invalid_argument unless `values` is n*n and symmetric.
  static SymMatrix from_rows(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  /// Writes both (i, j) and (j, i).
  void set_sym(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }

  double trace() const;
  double frobenius_norm() const;
  double max_abs_entry() const;
  bool is_symmetric(double tol = 0.0) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Product of two symmetric matrices that commute (e.g. powers of one
/// matrix), so the result is symmetric again. Rows are distributed over
/// OpenMP workers; each entry is computed by the same instruction sequence
/// whatever the worker count.
SymMatrix multiply_commuting(const SymMatrix& a, const SymMatrix& b, const ExecConfig& exec = {});
SymMatrix multiply_commuting_serial(const SymMatrix& a, const SymMatrix& b);

/// sum_ij a_ij b_ij, i.e. trace(a b) for symmetric a, b.
double frobenius_inner(const SymMatrix& a, const SymMatrix& b);

struct JacobiOptions {
  double relative_tol = 1e-12;  // stop when off-diagonal Frobenius mass < tol * ||M||_F
  int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Throws NumericError if `max_sweeps` sweeps do not converge.
std::vector<double> jacobi_eigenvalues(SymMatrix m, const JacobiOptions& options = {});

/// Smallest eigenvalue and the PSD verdict min_eig >= -tol * (1 + max|entry|).
struct PsdReport {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double threshold = 0.0;
};
PsdReport check_psd(const SymMatrix& m, double tol);

}  // namespace ggp
