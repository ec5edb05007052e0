#pragma once

#include "fracburgers/frac_ops.hpp"

namespace fracburgers::bounds {

/// Constants of the subsolution construction for the lower blow-up bound.
/// `lbc_a` / `lbc_b` are unrelated to the upper bound returned by upper_bound_b.
struct LowerBoundConstants {
  double alpha;
  double delta;
  double kappa;
  double eta;
  double d;
  double lbc_a;
  double lbc_b;
  double T;
  double c_delta;
};

/// (1 / Gamma(2 - alpha))^{1/alpha}. alpha = 1 returns exactly 1 (the
/// classical blow-up time); anything outside (0, 1] is rejected.
double upper_bound_b(FractionalOrder alpha);

/// e^{1 - gamma}: the alpha -> 0 limit and supremum of upper_bound_b.
double limit_upper_bound();

/// Throws ConsistencyError when the two algebraic forms of T disagree by more
/// than 1e-10 relative, and NumericalError when d underflows (very small alpha
/// with small delta).
LowerBoundConstants lower_bound_constants(FractionalOrder alpha, double delta);

double lower_bound_T(FractionalOrder alpha, double delta);

/// w(t) = b / (b - t) with b = upper_bound_b(alpha); 0 <= t < b.
double envelope_w(FractionalOrder alpha, double t);

/// z(t) = lbc_b / (lbc_a (1 - lbc_b t)) + 1 - lbc_b / lbc_a; 0 <= t < 1 / lbc_b.
double envelope_z(FractionalOrder alpha, double delta, double t);
double envelope_z(const LowerBoundConstants& c, double t);

/// upper_bound_b on `samples` uniform alphas in [0.01, 0.99]; true when strictly decreasing.
bool monotonicity_scan_b(int samples);

}  // namespace fracburgers::bounds
