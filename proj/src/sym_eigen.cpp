#include "fforge/sym_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fforge/errors.hpp"
#include "fforge/kernels.hpp"

namespace fforge {

namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_sq(const std::vector<double>& m, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = m[static_cast<std::size_t>(i) * n + j];
      sum += 2.0 * v * v;
    }
  }
  return sum;
}

}  // namespace

SymMatrix SymMatrix::zero(int n) {
  SymMatrix m;
  m.order = n;
  m.a.assign(static_cast<std::size_t>(n) * n, 0.0);
  return m;
}

EigenResult eigen_symmetric(const SymMatrix& mat) {
  const int n = mat.order;
  if (n < 1) throw BadParam("matrix order must be positive");
  if (n > 10000) throw BadParam("dense eigensolver capped at order 10^4");

  EigenResult res;
  res.order = n;
  std::vector<double> m = mat.a;
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double fro_sq = std::inner_product(m.begin(), m.end(), m.begin(), 0.0);
  const double stop_sq = fro_sq * 1e-28;  // off-norm <= 1e-14 * frobenius
  const auto rotate = kernels::rotate_pair();

  if (fro_sq > 0.0) {
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
      if (off_diagonal_sq(m, n) <= stop_sq) break;
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = m[static_cast<std::size_t>(p) * n + q];
          if (apq == 0.0) continue;
          const double app = m[static_cast<std::size_t>(p) * n + p];
          const double aqq = m[static_cast<std::size_t>(q) * n + q];
          // Inner-root rotation angle: |t| <= 1 keeps the update stable.
          const double tau = (aqq - app) / (2.0 * apq);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;

          double* row_p = m.data() + static_cast<std::size_t>(p) * n;
          double* row_q = m.data() + static_cast<std::size_t>(q) * n;
          rotate(row_p, row_q, static_cast<std::size_t>(n), c, s);
          for (int k = 0; k < n; ++k) {
            double* row_k = m.data() + static_cast<std::size_t>(k) * n;
            const double mkp = row_k[p];
            const double mkq = row_k[q];
            row_k[p] = c * mkp - s * mkq;
            row_k[q] = s * mkp + c * mkq;
          }
          row_p[q] = 0.0;
          row_q[p] = 0.0;
          rotate(w.data() + static_cast<std::size_t>(p) * n,
                 w.data() + static_cast<std::size_t>(q) * n,
                 static_cast<std::size_t>(n), c, s);
        }
      }
    }
    if (sweep == kMaxSweeps && off_diagonal_sq(m, n) > stop_sq) {
      throw ConvergenceFailure("Jacobi sweep limit exceeded at order " + std::to_string(n));
    }
  }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) {
    return m[static_cast<std::size_t>(i) * n + i] < m[static_cast<std::size_t>(j) * n + j];
  });

  res.values.resize(n);
  res.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    const int src = perm[k];
    res.values[k] = m[static_cast<std::size_t>(src) * n + src];
    std::copy_n(w.begin() + static_cast<std::size_t>(src) * n, n,
                res.vectors.begin() + static_cast<std::size_t>(k) * n);
  }
  return res;
}

}  // namespace fforge
