#include "fracburgers/frac_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "fracburgers/specfun.hpp"

namespace fracburgers {

double phi_value(const PowerTestFunction& phi, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("phi_value requires t >= 0");
  if (t > phi.horizon) return 0.0;
  return std::pow(1.0 - t / phi.horizon, phi.lambda);
}

double rl_right_derivative_phi(const PowerTestFunction& phi, FractionalOrder order, double t) {
  const double a = order.value();
  if (order.is_classical()) throw std::invalid_argument("right RL derivative needs alpha < 1");
  if (!(t >= 0.0) || !(t < phi.horizon)) {
    throw std::invalid_argument("right RL derivative of phi needs 0 <= t < T");
  }
  const double l = phi.lambda;
  const double log_ratio = specfun::log_gamma(l + 1.0) - specfun::log_gamma(l + 1.0 - a);
  return std::exp(log_ratio) * std::pow(phi.horizon, -a) *
         std::pow(1.0 - t / phi.horizon, l - a);
}

TestFunctionIntegrals quoted_test_function_integrals(const PowerTestFunction& phi,
                                                     FractionalOrder order) {
  if (order.is_classical()) throw std::invalid_argument("test function integrals need alpha < 1");
  const double a = order.value();
  const double l = phi.lambda;
  const double T = phi.horizon;
  if (!(l - 2.0 * a + 1.0 > 0.0) || !(l - a > 0.0)) {
    throw std::domain_error("test function integrals: nonpositive Gamma argument");
  }
  const double g_la = specfun::gamma(l - a);
  const double g_l2a = specfun::gamma(l - 2.0 * a + 1.0);
  const double first = l * g_la / ((l - a + 1.0) * g_l2a) * std::pow(T, 1.0 - a);
  const double ratio = g_la / g_l2a;
  const double second = l * l / (l + 1.0 - 2.0 * a) * ratio * ratio * std::pow(T, 1.0 - 2.0 * a);
  return {first, second};
}

}  // namespace fracburgers
