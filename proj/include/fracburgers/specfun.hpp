#pragma once

namespace fracburgers::specfun {

/// Euler Gamma function for x > 0. Relative error <= 1e-13 on (0.5, 3].
/// Throws std::domain_error for x <= 0 or non-finite x.
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// psi_0(x) = d/dx log Gamma(x) for x > 0. Absolute error <= 1e-12 on [1, 2].
double digamma(double x);

double euler_mascheroni() noexcept;

}  // namespace fracburgers::specfun
