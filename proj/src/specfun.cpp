#include "fracburgers/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracburgers::specfun {
namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) + " requires a finite x > 0, got " +
                            std::to_string(x));
  }
}

}  // namespace

double gamma(double x) {
  require_positive(x, "gamma");
  // glibc tgamma is within a few ulp on the positive axis.
  return std::tgamma(x);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double digamma(double x) {
  require_positive(x, "digamma");
  // Shift to x >= 10 with psi(x) = psi(x+1) - 1/x, then the Stirling series.
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // Bernoulli terms B_2k / (2k), k = 1..7
  const double series =
      inv2 * (1.0 / 12.0 -
      inv2 * (1.0 / 120.0 -
      inv2 * (1.0 / 252.0 -
      inv2 * (1.0 / 240.0 -
      inv2 * (1.0 / 132.0 -
      inv2 * (691.0 / 32760.0 -
      inv2 * (1.0 / 12.0)))))));
  return shift + std::log(x) - 0.5 / x - series;
}

double euler_mascheroni() noexcept { return std::numbers::egamma; }

}  // namespace fracburgers::specfun
