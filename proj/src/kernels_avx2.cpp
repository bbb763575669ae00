// AVX2 variant of the plane-rotation kernel. Compiled with -mavx2 only
// (no -mfma): mul then sub/add keeps every lane bit-identical to the
// scalar reference.

#include <immintrin.h>

#include "fforge/kernels.hpp"

namespace fforge::kernels {

void rotate_pair_avx2(double* x, double* y, std::size_t n, double c, double s) noexcept {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d yi = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(vc, xi), _mm256_mul_pd(vs, yi)));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(vs, xi), _mm256_mul_pd(vc, yi)));
  }
  for (; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

}  // namespace fforge::kernels
