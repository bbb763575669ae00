#include "fforge/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fforge::kernels {

void rotate_pair_scalar(double* x, double* y, std::size_t n, double c, double s) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

namespace {

struct Dispatch {
  RotateFn fn = &rotate_pair_scalar;
  const char* name = "scalar";
};

Dispatch resolve() noexcept {
  const char* env = std::getenv("FFORGE_SIMD");
  const bool force_scalar = env && std::strcmp(env, "scalar") == 0;
#if defined(FFORGE_HAVE_AVX2)
  const bool want_avx2 = !force_scalar;
  if (want_avx2 && __builtin_cpu_supports("avx2")) {
    return {&rotate_pair_avx2, "avx2"};
  }
#endif
  (void)force_scalar;
  return {};
}

const Dispatch& dispatch() noexcept {
  static const Dispatch d = resolve();
  return d;
}

}  // namespace

RotateFn rotate_pair() noexcept { return dispatch().fn; }

const char* active_kernel_name() noexcept { return dispatch().name; }

}  // namespace fforge::kernels
