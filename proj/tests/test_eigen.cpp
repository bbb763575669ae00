#include <doctest.h>

#include <cmath>
#include <random>

#include "fforge/errors.hpp"
#include "fforge/spectral.hpp"
#include "fforge/sym_eigen.hpp"
#include "fforge/tree.hpp"

using namespace fforge;

namespace {

double residual_inf(const SymMatrix& m, const EigenResult& r) {
  double worst = 0.0;
  const int n = m.order;
  for (int k = 0; k < n; ++k) {
    const auto v = r.vector(k);
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += m(i, j) * v[j];
      worst = std::max(worst, std::abs(acc - r.values[k] * v[i]));
    }
  }
  return worst;
}

double orthonormality_defect(const EigenResult& r) {
  double worst = 0.0;
  const int n = r.order;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i) dot += r.vector(a)[i] * r.vector(b)[i];
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("two-point Laplacian has eigenvalues 0 and 2") {
  SymMatrix m = SymMatrix::zero(2);
  m.set(0, 0, 1.0);
  m.set(1, 1, 1.0);
  m.set(0, 1, -1.0);
  const auto r = eigen_symmetric(m);
  CHECK(std::abs(r.values[0]) < 1e-14);
  CHECK(r.values[1] == doctest::Approx(2.0));
}

TEST_CASE("identity is already diagonal") {
  SymMatrix m = SymMatrix::zero(3);
  for (int i = 0; i < 3; ++i) m.set(i, i, 1.0);
  const auto r = eigen_symmetric(m);
  for (int i = 0; i < 3; ++i) CHECK(r.values[i] == 1.0);
}

TEST_CASE("three-point path spectrum is 0, 1, 3") {
  // det(L - x I) expands to -x^3 + 4x^2 - 3x = -x (x - 1)(x - 3).
  const auto r = eigen_symmetric(laplacian(build_path(3)));
  CHECK(std::abs(r.values[0]) < 1e-13);
  CHECK(r.values[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.values[2] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("random symmetric matrices: residual, orthonormality, trace") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int n : {1, 2, 5, 12, 33}) {
    SymMatrix m = SymMatrix::zero(n);
    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
      trace += m(i, i);
    }
    const auto r = eigen_symmetric(m);
    CHECK(residual_inf(m, r) < 1e-11 * n);
    CHECK(orthonormality_defect(r) < 1e-12);
    double sum = 0.0;
    for (double v : r.values) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-10));
    for (int k = 1; k < n; ++k) CHECK(r.values[k - 1] <= r.values[k]);
  }
}

TEST_CASE("tree Laplacian residuals stay under the budget") {
  for (const Tree& t : {build_rose({4, 5, 6}), build_starlike(6, 4), build_path(40)}) {
    const SymMatrix L = laplacian(t);
    const auto r = eigen_symmetric(L);
    CHECK(residual_inf(L, r) < 1e-11 * t.size());
  }
}

TEST_CASE("solver output is deterministic") {
  const SymMatrix L = laplacian(build_rose({3, 5, 4}));
  const auto a = eigen_symmetric(L);
  const auto b = eigen_symmetric(L);
  CHECK(a.values == b.values);
  CHECK(a.vectors == b.vectors);
}

TEST_CASE("bad orders are rejected") {
  SymMatrix m;
  m.order = 0;
  CHECK_THROWS_AS(eigen_symmetric(m), BadParam);
  m.order = 10001;
  CHECK_THROWS_AS(eigen_symmetric(m), BadParam);
}
