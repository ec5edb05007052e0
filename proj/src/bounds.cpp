#include "fracburgers/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fracburgers/errors.hpp"
#include "fracburgers/specfun.hpp"

namespace fracburgers::bounds {
namespace {

double require_fractional(FractionalOrder alpha) {
  if (alpha.is_classical()) {
    throw std::invalid_argument("lower bound constants need alpha in (0, 1)");
  }
  return alpha.value();
}

}  // namespace

double upper_bound_b(FractionalOrder alpha) {
  if (alpha.is_classical()) return 1.0;
  const double a = alpha.value();
  return std::exp(-specfun::log_gamma(2.0 - a) / a);
}

double limit_upper_bound() { return std::exp(1.0 - specfun::euler_mascheroni()); }

LowerBoundConstants lower_bound_constants(FractionalOrder alpha, double delta) {
  const double a = require_fractional(alpha);
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be a finite positive number");
  }
  LowerBoundConstants c{};
  c.alpha = a;
  c.delta = delta;
  c.kappa = std::sqrt(1.0 + delta) - 1.0;
  c.eta = (1.0 + c.kappa) * (1.0 + c.kappa) / (c.kappa * c.kappa);
  const double g = specfun::gamma(2.0 - a);
  c.d = std::pow(1.0 / (g * c.kappa * c.eta * (1.0 + c.eta)), 1.0 / a);
  if (!(c.d >= std::numeric_limits<double>::min())) {
    throw NumericalError("lower bound constants underflow double precision at alpha=" +
                         std::to_string(a) + ", delta=" + std::to_string(delta));
  }
  c.lbc_a = g / std::pow(c.d, 1.0 - a);
  c.lbc_b = (1.0 + c.kappa) * c.lbc_a;
  c.T = 1.0 / c.lbc_b - (1.0 + c.eta) * c.d;
  const double k = c.kappa;
  c.c_delta = k * k * k / ((1.0 + k) * (1.0 + k) * (1.0 + 2.0 * k + 2.0 * k * k));

  const double closed = std::pow(c.c_delta, (1.0 - a) / a) / (std::pow(g, 1.0 / a) * (1.0 + delta));
  if (!(c.T > 0.0) || !(std::abs(c.T - closed) <= 1e-10 * std::abs(closed))) {
    throw ConsistencyError("lower bound T mismatch: difference form " + std::to_string(c.T) +
                           " vs closed form " + std::to_string(closed));
  }
  return c;
}

double lower_bound_T(FractionalOrder alpha, double delta) {
  return lower_bound_constants(alpha, delta).T;
}

double envelope_w(FractionalOrder alpha, double t) {
  const double b = upper_bound_b(alpha);
  if (!(t >= 0.0) || !(t < b)) {
    throw std::domain_error("envelope_w needs 0 <= t < " + std::to_string(b));
  }
  return b / (b - t);
}

double envelope_z(const LowerBoundConstants& c, double t) {
  if (!(t >= 0.0) || !(t * c.lbc_b < 1.0)) {
    throw std::domain_error("envelope_z needs 0 <= t < 1/b");
  }
  const double ratio = c.lbc_b / c.lbc_a;
  return ratio / (1.0 - c.lbc_b * t) + 1.0 - ratio;
}

double envelope_z(FractionalOrder alpha, double delta, double t) {
  return envelope_z(lower_bound_constants(alpha, delta), t);
}

bool monotonicity_scan_b(int samples) {
  if (samples < 10) throw std::invalid_argument("monotonicity scan needs >= 10 samples");
  double previous = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double a = 0.01 + 0.98 * static_cast<double>(i) / static_cast<double>(samples - 1);
    const double b = upper_bound_b(FractionalOrder(a));
    if (i > 0 && !(b < previous)) return false;
    previous = b;
  }
  return true;
}

}  // namespace fracburgers::bounds
