#include "fforge/rose.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fforge/errors.hpp"
#include "fforge/spectral.hpp"

namespace fforge::rose {

namespace {

constexpr double kPi = std::numbers::pi;

// R_n and R_{n-1} in one pass.
void branch_pair(int n, double x, double& rn, double& rn1) {
  double prev = 1.0;       // R_0
  double cur = 1.0 - x;    // R_1
  if (n == 0) {
    rn = prev;
    rn1 = 0.0;  // unused
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 - x) * cur - prev;
    prev = cur;
    cur = next;
  }
  rn = cur;
  rn1 = prev;
}

}  // namespace

double branch_poly(int n, double x) {
  if (n < 0) throw BadParam("branch polynomial index must be >= 0");
  double rn, rn1;
  branch_pair(n, x, rn, rn1);
  return rn;
}

double branch_poly_closed(int n, double x) {
  if (n < 0) throw BadParam("branch polynomial index must be >= 0");
  if (x < 0.0 || x > 1.0) throw DomainError("closed form requires x in [0,1]");
  const double theta = std::acos(1.0 - x / 2.0);
  return std::cos((n + 0.5) * theta) / std::cos(theta / 2.0);
}

double star_poly(int p, double x) { return x * x - (p + 2.0) * x + 1.0; }

double junction_poly(int p, double x) {
  return (x - 3.0) * star_poly(p, x) + (1.0 - x);
}

double limit_poly(int s, double x) {
  if (s < 1) throw BadParam("limit polynomial needs s >= 1");
  double rs, rs1;
  branch_pair(s, x, rs, rs1);
  return 2.0 * rs1 + (x - 3.0) * rs;
}

double symmetric_factor(int s, int p, double x) {
  if (s < 1) throw BadParam("symmetric factor needs s >= 1");
  double rs, rs1;
  branch_pair(s, x, rs, rs1);
  return 2.0 * rs1 * star_poly(p, x) + rs * junction_poly(p, x);
}

double connectivity_poly(int s, int t, int p, double x) {
  if (s < 1 || t < 1) throw BadParam("characteristic function needs s,t >= 1");
  double rs, rs1, rt, rt1;
  branch_pair(s, x, rs, rs1);
  branch_pair(t, x, rt, rt1);
  return (rs * rt1 + rs1 * rt) * star_poly(p, x) + junction_poly(p, x) * rs * rt;
}

double branch_root(int s) {
  if (s < 1) throw BadParam("branch root needs s >= 1");
  return 2.0 * (1.0 - std::cos(kPi / (2.0 * s + 1.0)));
}

double branch_root_real(double s) {
  if (s < 0.5) throw BadParam("branch root needs s >= 1/2");
  return 2.0 * (1.0 - std::cos(kPi / (2.0 * s + 1.0)));
}

double fed_threshold(int s) {
  const double r = branch_root(s);
  return (r - 1.0) * (r - 1.0) / r;
}

double asymptotic_ratio(int s) {
  if (s < 1) throw BadParam("asymptotic ratio needs s >= 1");
  return fed_threshold(s) / ((4.0 / (kPi * kPi)) * s * s);
}

double first_positive_root(const std::function<double(double)>& f, double upper) {
  if (!(upper > 0.0)) throw BadParam("root scan needs upper > 0");
  constexpr double kSkip = 1e-9;
  constexpr int kGrid = 2048;
  constexpr double kBisectTol = 1e-13;
  constexpr double kEndpointTol = 1e-10;

  const double step = upper / kGrid;
  double a = kSkip;
  double fa = f(a);
  if (fa == 0.0) return a;
  for (int k = 1; k <= kGrid; ++k) {
    const double b = k == kGrid ? upper : kSkip + k * step;
    if (b <= a) continue;
    const double fb = f(b);
    if (fb == 0.0) return b;
    if ((fa < 0.0) != (fb < 0.0)) {
      double lo = a, hi = b;
      double flo = fa;
      while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) != (fm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      return 0.5 * (lo + hi);
    }
    a = b;
    fa = fb;
  }
  if (std::abs(f(upper)) <= kEndpointTol) return upper;
  throw NoRoot("no sign change found below " + std::to_string(upper));
}

double alpha_analytic(int s, int t, int p) {
  if (s < 3 || t < 3) throw BadParam("analytic connectivity assumes s,t >= 3");
  if (p < 0) throw BadParam("leaf count must be >= 0");
  if (s > t) std::swap(s, t);

  if (s == t) {
    // chi factors as R_s * f_p; the first root is min(r(s), first root of
    // f_p). Scanning the factor avoids the double crossing at the plateau
    // boundary where rho(s,p) and r(s) collide.
    const double r = branch_root(s);
    try {
      return first_positive_root([&](double x) { return symmetric_factor(s, p, x); }, r);
    } catch (const NoRoot&) {
      return r;  // plateau regime: the root is r(s) itself
    }
  }

  // Contracting the star onto the junction bounds alpha by the connectivity
  // of the path on s+t+1 vertices, i.e. r((s+t)/2) at real argument.
  const double upper = branch_root_real((s + t) / 2.0) + 1e-6;
  return first_positive_root([&](double x) { return connectivity_poly(s, t, p, x); },
                             upper);
}

double connectivity_limit(int s) {
  if (s < 3) throw BadParam("connectivity limit assumes s >= 3");
  // h_s(0) = -1 < 0 < h_s(r(s)) and h_s is increasing in between.
  double lo = 0.0, hi = branch_root(s);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = limit_poly(s, mid);
    if (fm == 0.0) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// p <= threshold decided exactly; a threshold this close to the integer is
// reported as unresolved instead.
enum class Side { Below, Above, TooClose };

Side compare_to_threshold(int p, double threshold) {
  if (std::abs(threshold - p) < 1e-9) return Side::TooClose;
  return p <= threshold ? Side::Below : Side::Above;
}

}  // namespace

RoseVerdict predict_fed(int s, int t, int p) {
  if (s < 3 || t < 3) throw BadParam("prediction assumes s,t >= 3");
  if (p < 0) throw BadParam("leaf count must be >= 0");
  RoseVerdict v;
  if (s > t) {
    std::swap(s, t);
    v.swapped = true;
  }
  v.alpha_analytic = alpha_analytic(s, t, p);

  if (s == t) {
    const double f = fed_threshold(s);
    v.threshold_low = f;
    v.threshold_high = f;
    switch (compare_to_threshold(p, f)) {
      case Side::Below:
        v.prediction = FedPrediction::FedTrue;
        v.basis = PredictionBasis::ExactThreshold;
        break;
      case Side::Above:
        v.prediction = FedPrediction::FedFalse;
        v.basis = PredictionBasis::ExactThreshold;
        break;
      case Side::TooClose:
        v.prediction = FedPrediction::Indeterminate;
        v.basis = PredictionBasis::NumericFallback;
        break;
    }
    return v;
  }

  v.threshold_low = fed_threshold(s) - 1.0;
  v.threshold_high = fed_threshold(t + 2);
  const Side low = compare_to_threshold(p, v.threshold_low);
  const Side high = compare_to_threshold(p, v.threshold_high);
  if (low == Side::Below) {
    v.prediction = FedPrediction::FedTrue;
    v.basis = PredictionBasis::LowerBound;
  } else if (high == Side::Above) {
    v.prediction = FedPrediction::FedFalse;
    v.basis = PredictionBasis::UpperBound;
  } else {
    v.prediction = FedPrediction::Indeterminate;
    v.basis = PredictionBasis::NumericFallback;
  }
  return v;
}

double RelationResiduals::max() const {
  double m = center;
  for (double v : {junction, neighbor_sum, branch_left, branch_right, leaf_spread}) {
    m = std::max(m, v);
  }
  return m;
}

RelationResiduals verify_eigen_relations(int s, int t, int p) {
  if (s < 1 || t < 1 || p < 0) throw BadParam("invalid rose parameters");
  const RoseParams rp{s, t, p};
  const Tree tree = build_rose(rp);
  const FiedlerReport rep = fiedler(tree);
  if (rep.multiplicity != 1) {
    throw DegenerateEigenspace("second eigenvalue of R(" + std::to_string(s) + "," +
                               std::to_string(t) + "," + std::to_string(p) +
                               ") is not simple");
  }
  const double a = rep.lambda2;
  const auto& phi = rep.vector;
  const int c = rp.center();  // 1-based

  double leaf_value;
  RelationResiduals res;
  if (p > 0) {
    double sum = 0.0;
    for (int i = c + 1; i <= rp.vertex_count(); ++i) sum += phi[i - 1];
    leaf_value = sum / p;
    for (int i = c + 1; i <= rp.vertex_count(); ++i) {
      res.leaf_spread = std::max(res.leaf_spread, std::abs(phi[i - 1] - leaf_value));
    }
  } else {
    // No leaves: the common value is defined through the center relation.
    leaf_value = phi[c - 1] / (1.0 - a);
  }

  res.center = std::abs((1.0 - a) * leaf_value - phi[c - 1]);
  res.junction = std::abs(star_poly(p, a) * leaf_value - phi[rp.s]);
  res.neighbor_sum =
      std::abs(-junction_poly(p, a) * leaf_value - (phi[rp.s - 1] + phi[rp.s + 1]));
  const double rs = branch_poly(s, a);
  for (int i = 1; i <= s; ++i) {
    res.branch_left = std::max(
        res.branch_left, std::abs(rs * phi[i - 1] - branch_poly(i - 1, a) * phi[rp.s]));
  }
  const double rt = branch_poly(t, a);
  for (int i = 1; i <= t; ++i) {
    res.branch_right = std::max(
        res.branch_right,
        std::abs(rt * phi[i + s] - branch_poly(t - i, a) * phi[rp.s]));
  }
  return res;
}

const char* to_string(FedPrediction p) {
  switch (p) {
    case FedPrediction::FedTrue: return "true";
    case FedPrediction::FedFalse: return "false";
    case FedPrediction::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* to_string(PredictionBasis b) {
  switch (b) {
    case PredictionBasis::ExactThreshold: return "exact_threshold";
    case PredictionBasis::LowerBound: return "lower_bound";
    case PredictionBasis::UpperBound: return "upper_bound";
    case PredictionBasis::NumericFallback: return "numeric_fallback";
  }
  return "?";
}

}  // namespace fforge::rose
