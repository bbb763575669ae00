#pragma once

#include <cstddef>

namespace fforge::kernels {

// Plane rotation applied elementwise to two equal-length rows:
//   x[i] <- c*x[i] - s*y[i]
//   y[i] <- s*x[i] + c*y[i]
// This is the inner loop of the Jacobi eigensolver (row and eigenvector
// updates). Variants must produce bit-identical results: each lane performs
// the same IEEE mul/sub/add sequence, so the AVX2 path is exactly the scalar
// path four lanes at a time (no FMA contraction).
using RotateFn = void (*)(double* x, double* y, std::size_t n, double c, double s);

void rotate_pair_scalar(double* x, double* y, std::size_t n, double c, double s) noexcept;

#if defined(FFORGE_HAVE_AVX2)
void rotate_pair_avx2(double* x, double* y, std::size_t n, double c, double s) noexcept;
#endif

// Resolved once per process: AVX2 when the CPU supports it, otherwise scalar.
// FFORGE_SIMD=scalar|avx2 overrides (an unsupported request falls back to
// scalar).
RotateFn rotate_pair() noexcept;
const char* active_kernel_name() noexcept;

}  // namespace fforge::kernels
