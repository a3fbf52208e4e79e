#include "ggp/linalg.hpp"

#include "ggp/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ggp {

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

SymMatrix SymMatrix::from_rows(std::size_t n, std::vector<double> values) {
  if (values.size() != n * n) throw std::invalid_argument("SymMatrix: expected n*n values");
  SymMatrix out;
  out.n_ = n;
  out.data_ = std::move(values);
  if (!out.is_symmetric()) throw std::invalid_argument("SymMatrix: values are not symmetric");
  return out;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double SymMatrix::max_abs_entry() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

bool SymMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

namespace {

// Row i of a*b, i-k-j order so the inner loop streams over contiguous rows.
inline void product_row(const SymMatrix& a, const SymMatrix& b, std::size_t i, double* out) {
  const std::size_t n = a.size();
  std::fill(out, out + n, 0.0);
  const double* arow = a.row(i).data();
  const double* bdata = b.values().data();
  for (std::size_t k = 0; k < n; ++k) {
    const double aik = arow[k];
    if (aik == 0.0) continue;
    const double* brow = bdata + k * n;
    for (std::size_t j = 0; j < n; ++j) out[j] += aik * brow[j];
  }
}

void require_same_size(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
}

}  // namespace

SymMatrix multiply_commuting(const SymMatrix& a, const SymMatrix& b, const ExecConfig& exec) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  SymMatrix out(n);
  double* data = out.values().data();
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(exec))
  for (std::int64_t i = 0; i < rows; ++i) product_row(a, b, static_cast<std::size_t>(i), data + i * rows);
  return out;
}

SymMatrix multiply_commuting_serial(const SymMatrix& a, const SymMatrix& b) {
  require_same_size(a, b);
  const std::size_t n = a.size();
  SymMatrix out(n);
  double* data = out.values().data();
  for (std::size_t i = 0; i < n; ++i) product_row(a, b, i, data + i * n);
  return out;
}

double frobenius_inner(const SymMatrix& a, const SymMatrix& b) {
  require_same_size(a, b);
  const auto x = a.values();
  const auto y = b.values();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::vector<double> jacobi_eigenvalues(SymMatrix m, const JacobiOptions& options) {
  const std::size_t n = m.size();
  const double norm = m.frobenius_norm();
  const double target = options.relative_tol * norm;

  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  for (double off = off_mass(); off > target; off = off_mass()) {
    if (sweep++ == options.max_sweeps) {
      throw NumericError("Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) +
                         " sweeps (off-diagonal mass " + format_real(off) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double app = m(p, p);
        const double aqq = m(q, q);
        // Rotation angle zeroing (p, q); the smaller root of t^2 + 2 theta t - 1 = 0.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = m(k, p);
          const double akq = m(k, q);
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          m.set_sym(k, p, nkp);
          m.set_sym(k, q, nkq);
        }
        m(p, p) = app - t * apq;
        m(q, q) = aqq + t * apq;
        m.set_sym(p, q, 0.0);
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

PsdReport check_psd(const SymMatrix& m, double tol) {
  PsdReport r;
  const auto eig = jacobi_eigenvalues(m);
  r.min_eigenvalue = eig.empty() ? 0.0 : eig.front();
  r.threshold = -tol * (1.0 + m.max_abs_entry());
  r.psd = r.min_eigenvalue >= r.threshold;
  return r;
}

}  // namespace ggp
