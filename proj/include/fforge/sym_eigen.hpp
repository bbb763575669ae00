#pragma once

#include <span>
#include <vector>

namespace fforge {

/// Dense symmetric matrix, row-major. Symmetry is maintained by
/// construction: set() writes both mirror entries.
struct SymMatrix {
  int order = 0;
  std::vector<double> a;

  static SymMatrix zero(int n);

  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * order + j]; }
  void set(int i, int j, double value) {
    a[static_cast<std::size_t>(i) * order + j] = value;
    a[static_cast<std::size_t>(j) * order + i] = value;
  }
};

/// Full spectrum of a symmetric matrix. values are ascending; row k of
/// vectors is the unit eigenvector for values[k]; rows are mutually
/// orthonormal.
struct EigenResult {
  int order = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // order x order, row-major

  std::span<const double> vector(int k) const {
    return {vectors.data() + static_cast<std::size_t>(k) * order,
            static_cast<std::size_t>(order)};
  }
};

/// Cyclic Jacobi in fixed row-major rotation order: deterministic, high
/// relative accuracy, no dependencies. Intended for order up to a few
/// thousand (dense); order > 10^4 is rejected. Throws ConvergenceFailure
/// if the off-diagonal mass has not collapsed after the sweep limit.
EigenResult eigen_symmetric(const SymMatrix& m);

}  // namespace fforge
