#pragma once

#include <functional>

#include "fforge/tree.hpp"

namespace fforge::rose {

// Closed-form machinery for the connectivity of R(s,t,p). Everything is
// evaluated pointwise through recurrences; nothing is ever expanded to
// coefficient form (the expanded coefficients are ill-conditioned for
// large s,t while the recurrence is backward stable).

/// Branch transfer polynomial by the three-term recurrence
///   R_0 = 1,  R_1 = 1 - x,  R_n = (2 - x) R_{n-1} - R_{n-2}.
double branch_poly(int n, double x);

/// Same polynomial via the trigonometric closed form
///   R_n(x) = cos((n + 1/2) theta) / cos(theta / 2),  cos(theta) = 1 - x/2,
/// valid on x in [0, 1] (DomainError outside).
double branch_poly_closed(int n, double x);

/// Star coupling quadratic P(x) = x^2 - (p+2) x + 1.
double star_poly(int p, double x);

/// Junction cubic Q(x) = (x - 3) P(x) + (1 - x).
double junction_poly(int p, double x);

/// h_s(x) = 2 R_{s-1}(x) + (x - 3) R_s(x); its root in (0, r(s)) is the
/// large-p limit of the connectivity of R(s,s,p).
double limit_poly(int s, double x);

/// Symmetric-case factor f_p = 2 R_{s-1} P + R_s Q, so that the s = t
/// characteristic function factors as R_s * f_p. Also equals
/// P h_s - (x - 1) R_s.
double symmetric_factor(int s, int p, double x);

/// Connectivity characteristic function
///   chi_{p,s,t} = (R_s R_{t-1} + R_{s-1} R_t) P + Q R_s R_t;
/// its first positive root is the algebraic connectivity of R(s,t,p).
double connectivity_poly(int s, int t, int p, double x);

/// First positive root of the branch polynomial: r(s) = 2(1 - cos(pi/(2s+1))).
double branch_root(int s);

/// r extended to real arguments (used for the contraction bound at (s+t)/2).
double branch_root_real(double s);

/// Exact FED threshold for the symmetric family: f(s,s) = (r(s)-1)^2 / r(s).
double fed_threshold(int s);

/// threshold_f(s) / ((4/pi^2) s^2); tends to 1.
double asymptotic_ratio(int s);

/// Smallest root in (eps, upper] of a function vanishing at 0: sign-change
/// scan on a 2048-point grid from eps = 1e-9, then bisection to 1e-13.
/// When no interior sign change exists, returns upper if |f(upper)| <= 1e-10
/// (root sitting on the endpoint), otherwise throws NoRoot.
double first_positive_root(const std::function<double(double)>& f, double upper);

/// Algebraic connectivity of R(s,t,p) by root isolation alone (no
/// eigensolve). Requires s,t >= 3.
double alpha_analytic(int s, int t, int p);

/// Root of h_s on (0, r(s)): the limit of alpha(s,s,p) as p grows.
double connectivity_limit(int s);

enum class FedPrediction { FedTrue, FedFalse, Indeterminate };
enum class PredictionBasis { ExactThreshold, LowerBound, UpperBound, NumericFallback };

struct RoseVerdict {
  FedPrediction prediction = FedPrediction::Indeterminate;
  PredictionBasis basis = PredictionBasis::NumericFallback;
  double alpha_analytic = 0.0;
  double threshold_low = 0.0;
  double threshold_high = 0.0;
  bool swapped = false;  // input had s > t and was normalized
};

/// Threshold verdict for R(s,t,p) (s,t >= 3, normalized to s <= t):
///  - s == t: exact flip at f(s,s);
///  - s < t: true for p <= f(s,s)-1, false for p >= f(t+2,t+2),
///    Indeterminate in between (callers fall back to the eigensolver).
/// A threshold within 1e-9 of the integer p is reported Indeterminate
/// rather than decided by a razor-thin comparison.
RoseVerdict predict_fed(int s, int t, int p);

/// Max residuals of the closed-form eigenvector relations, evaluated
/// against the numeric second eigenpair of R(s,t,p).
struct RelationResiduals {
  double center = 0.0;        // (1-a) leaf_value - phi_c
  double junction = 0.0;      // P(a) leaf_value - phi_{s+1}
  double neighbor_sum = 0.0;  // -Q(a) leaf_value - (phi_s + phi_{s+2})
  double branch_left = 0.0;   // R_s(a) phi_i - R_{i-1}(a) phi_{s+1}
  double branch_right = 0.0;  // R_t(a) phi_{s+1+i} - R_{t-i}(a) phi_{s+1}
  double leaf_spread = 0.0;   // max |phi_leaf - leaf_value|

  double max() const;
};

/// Checks the relation system on the unit-norm numeric Fiedler vector.
/// Throws DegenerateEigenspace when the second eigenvalue is not simple.
RelationResiduals verify_eigen_relations(int s, int t, int p);

const char* to_string(FedPrediction p);
const char* to_string(PredictionBasis b);

}  // namespace fforge::rose
