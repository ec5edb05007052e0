#pragma once

// Discrete fractional operators on uniform time grids.
//
// Everything in this header is templated on the scalar type so the same
// kernels run in double for production and in long double when a test wants
// a tighter roundoff reference. Weights are built eagerly per call; no
// state is shared between calls.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace fracburgers {

/// Order alpha of a Caputo / Riemann-Liouville operator, 0 < alpha <= 1.
/// alpha = 1 is the classical limit and is accepted only by operators
/// that define it.
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("fractional order must lie in (0, 1], got " +
                                  std::to_string(alpha));
    }
  }

  double value() const noexcept { return alpha_; }
  bool is_classical() const noexcept { return alpha_ == 1.0; }

 private:
  double alpha_;
};

/// Uniform time nodes t_j = origin + j * step, j = 0..count.
struct TimeGrid {
  double step = 1.0;
  std::size_t count = 1;
  double origin = 0.0;

  TimeGrid(double step_, std::size_t count_, double origin_ = 0.0)
      : step(step_), count(count_), origin(origin_) {
    if (!(step > 0.0) || !std::isfinite(step)) {
      throw std::invalid_argument("time step must be positive and finite");
    }
    if (count == 0) throw std::invalid_argument("time grid needs at least 2 nodes");
    if (!std::isfinite(origin)) throw std::invalid_argument("time origin must be finite");
  }

  /// Smallest grid with the given step whose last node reaches `horizon`.
  /// A horizon within 1e-9 relative of a whole number of steps is not rounded up.
  static TimeGrid covering(double step, double horizon) {
    if (!(step > 0.0) || !(horizon > 0.0)) {
      throw std::invalid_argument("step and horizon must be positive");
    }
    const double ratio = horizon / step;
    const double nearest = std::round(ratio);
    const double n = std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio)
                         ? nearest
                         : std::ceil(ratio);
    return TimeGrid(step, static_cast<std::size_t>(std::max(1.0, n)));
  }

  /// Builds a grid from explicit node positions, rejecting non-uniform spacing.
  static TimeGrid from_nodes(std::span<const double> nodes, double rel_tol = 1e-9) {
    if (nodes.size() < 2) throw std::invalid_argument("time grid needs at least 2 nodes");
    const double step = (nodes.back() - nodes.front()) / static_cast<double>(nodes.size() - 1);
    if (!(step > 0.0)) throw std::invalid_argument("time nodes must be strictly increasing");
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double expected = nodes.front() + static_cast<double>(j) * step;
      if (std::abs(nodes[j] - expected) > rel_tol * std::max(step, std::abs(expected))) {
        throw std::invalid_argument("non-uniform time grid at node " + std::to_string(j));
      }
    }
    return TimeGrid(step, nodes.size() - 1, nodes.front());
  }

  double node(std::size_t j) const noexcept {
    return origin + static_cast<double>(j) * step;
  }
  std::size_t size() const noexcept { return count + 1; }
  double last() const noexcept { return node(count); }
};

/// Real values attached to the nodes of a TimeGrid.
template <typename Scalar>
struct BasicSampledFunction {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  TimeGrid grid;
  Vector values;

  BasicSampledFunction(TimeGrid grid_, Vector values_)
      : grid(grid_), values(std::move(values_)) {
    if (static_cast<std::size_t>(values.size()) != grid.size()) {
      throw std::invalid_argument("sample count does not match the grid");
    }
  }

  std::size_t size() const noexcept { return grid.size(); }
  Scalar operator[](std::size_t j) const { return values(static_cast<Eigen::Index>(j)); }
  bool all_finite() const { return values.allFinite(); }
};

using SampledFunction = BasicSampledFunction<double>;

template <typename Scalar = double, typename Fn>
BasicSampledFunction<Scalar> sample(const TimeGrid& grid, Fn&& fn) {
  typename BasicSampledFunction<Scalar>::Vector v(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    v(static_cast<Eigen::Index>(j)) = static_cast<Scalar>(fn(grid.node(j)));
  }
  return {grid, std::move(v)};
}

namespace detail {

/// Neumaier summation; terms are added strictly in call order.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(Scalar x) noexcept {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Scalar value() const noexcept { return sum_ + comp_; }

 private:
  Scalar sum_ = 0;
  Scalar comp_ = 0;
};

/// sum_{m >= first, m even if even_only} C(p, m) x^m for |x| < 1.
template <typename Scalar>
Scalar binomial_tail(Scalar p, Scalar x, int first, bool even_only) {
  Scalar term = 1;
  Scalar acc = 0;
  for (int m = 1; m < 400; ++m) {
    term *= (p - Scalar(m - 1)) / Scalar(m) * x;
    if (term == 0) break;
    if (m < first || (even_only && m % 2 != 0)) continue;
    acc += term;
    if (m > first + 2 && std::abs(term) <= std::numeric_limits<Scalar>::epsilon() * std::abs(acc) * Scalar(0.25)) {
      break;
    }
  }
  return acc;
}

}  // namespace detail

/// Convolution weights of the product-integration rules. Closed forms are
/// rearranged so the large-index weights carry no cancellation.
namespace weights {

/// L1 weights b_k = (k+1)^{1-a} - k^{1-a}, k = 0..n-1.
template <typename Scalar>
std::vector<Scalar> l1(Scalar alpha, std::size_t n) {
  std::vector<Scalar> b(n);
  const Scalar e = Scalar(1) - alpha;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      b[k] = 1;
    } else {
      const Scalar kk = static_cast<Scalar>(k);
      b[k] = std::pow(kk, e) * std::expm1(e * std::log1p(Scalar(1) / kk));
    }
  }
  return b;
}

/// Product-rectangle weights r_k = k^a - (k-1)^a, k = 0..n (r_0 unused, 0).
template <typename Scalar>
std::vector<Scalar> rectangle(Scalar alpha, std::size_t n) {
  std::vector<Scalar> r(n + 1, Scalar(0));
  for (std::size_t k = 1; k <= n; ++k) {
    const Scalar kk = static_cast<Scalar>(k);
    r[k] = k == 1 ? Scalar(1) : -std::pow(kk, alpha) * std::expm1(alpha * std::log1p(Scalar(-1) / kk));
  }
  return r;
}

/// Interior product-trapezoid weights
/// c_k = (k+1)^{a+1} - 2 k^{a+1} + (k-1)^{a+1}, k = 0..n (c_0 unused, 0).
template <typename Scalar>
std::vector<Scalar> trapezoid_interior(Scalar alpha, std::size_t n) {
  std::vector<Scalar> c(n + 1, Scalar(0));
  const Scalar p = alpha + Scalar(1);
  for (std::size_t k = 1; k <= n; ++k) {
    const Scalar kk = static_cast<Scalar>(k);
    if (k == 1) {
      c[k] = std::pow(Scalar(2), p) - Scalar(2);
    } else {
      c[k] = Scalar(2) * std::pow(kk, p) * detail::binomial_tail(p, Scalar(1) / kk, 2, true);
    }
  }
  return c;
}

/// Product-trapezoid weight of the initial node at target node n >= 1:
/// (n-1)^{a+1} - (n-1-a) n^a.
template <typename Scalar>
Scalar trapezoid_start(Scalar alpha, std::size_t n) {
  if (n == 1) return alpha;
  const Scalar nn = static_cast<Scalar>(n);
  const Scalar p = alpha + Scalar(1);
  return std::pow(nn, p) * detail::binomial_tail(p, Scalar(-1) / nn, 2, false);
}

}  // namespace weights

/// Left Caputo derivative by the L1 scheme: the exact Caputo derivative of the
/// piecewise-linear interpolant, evaluated at t_1..t_N. Node t_0 is set to 0.
/// Requires alpha < 1; route alpha = 1 to classical_derivative.
template <typename Scalar>
BasicSampledFunction<Scalar> caputo_left(const BasicSampledFunction<Scalar>& f,
                                         FractionalOrder order) {
  if (order.is_classical()) {
    throw std::invalid_argument("caputo_left requires alpha < 1; use classical_derivative");
  }
  const std::size_t n_nodes = f.size();
  const Scalar alpha = static_cast<Scalar>(order.value());
  const auto b = weights::l1<Scalar>(alpha, n_nodes - 1);
  const Scalar h = static_cast<Scalar>(f.grid.step);
  const Scalar scale = std::pow(h, -alpha) / std::tgamma(Scalar(2) - alpha);

  typename BasicSampledFunction<Scalar>::Vector out(static_cast<Eigen::Index>(n_nodes));
  out(0) = 0;
  for (std::size_t n = 1; n < n_nodes; ++n) {
    detail::CompensatedSum<Scalar> acc;
    for (std::size_t k = 0; k < n; ++k) {
      acc.add(b[k] * (f[n - k] - f[n - k - 1]));
    }
    out(static_cast<Eigen::Index>(n)) = scale * acc.value();
  }
  return {f.grid, std::move(out)};
}

/// Backward differences (f_n - f_{n-1}) / h at t_1..t_N; t_0 is set to 0.
template <typename Scalar>
BasicSampledFunction<Scalar> classical_derivative(const BasicSampledFunction<Scalar>& f) {
  const Scalar h = static_cast<Scalar>(f.grid.step);
  typename BasicSampledFunction<Scalar>::Vector out(static_cast<Eigen::Index>(f.size()));
  out(0) = 0;
  for (std::size_t n = 1; n < f.size(); ++n) {
    out(static_cast<Eigen::Index>(n)) = (f[n] - f[n - 1]) / h;
  }
  return {f.grid, std::move(out)};
}

/// Riemann-Liouville integral (1/Gamma(a)) int_0^t g(s) (t-s)^{a-1} ds by the
/// product-trapezoid rule, exact for piecewise-linear g. Value at t_0 is 0.
template <typename Scalar>
BasicSampledFunction<Scalar> rl_fractional_integral(const BasicSampledFunction<Scalar>& g,
                                                    FractionalOrder order) {
  const std::size_t n_nodes = g.size();
  const Scalar alpha = static_cast<Scalar>(order.value());
  const auto c = weights::trapezoid_interior<Scalar>(alpha, n_nodes);
  const Scalar h = static_cast<Scalar>(g.grid.step);
  const Scalar scale = std::pow(h, alpha) / std::tgamma(alpha + Scalar(2));

  typename BasicSampledFunction<Scalar>::Vector out(static_cast<Eigen::Index>(n_nodes));
  out(0) = 0;
  for (std::size_t n = 1; n < n_nodes; ++n) {
    detail::CompensatedSum<Scalar> acc;
    acc.add(weights::trapezoid_start<Scalar>(alpha, n) * g[0]);
    for (std::size_t j = 1; j < n; ++j) acc.add(c[n - j] * g[j]);
    acc.add(g[n]);
    out(static_cast<Eigen::Index>(n)) = scale * acc.value();
  }
  return {g.grid, std::move(out)};
}

/// phi(t) = (1 - t/T)^lambda on [0, T], extended by 0 for t > T.
struct PowerTestFunction {
  double lambda;
  double horizon;

  PowerTestFunction(double lambda_, double horizon_) : lambda(lambda_), horizon(horizon_) {
    if (!(lambda >= 2.0)) throw std::invalid_argument("test function exponent must be >= 2");
    if (!(horizon > 0.0)) throw std::invalid_argument("test function horizon must be positive");
  }
};

double phi_value(const PowerTestFunction& phi, double t);

/// Right Riemann-Liouville derivative of phi with final time T:
/// Gamma(l+1)/Gamma(l+1-a) T^{-a} (1-t/T)^{l-a}, for 0 <= t < T.
double rl_right_derivative_phi(const PowerTestFunction& phi, FractionalOrder order, double t);

/// The two test-function integrals in the form the blow-up argument quotes them:
///   first  = l Gamma(l-a) / ((l-a+1) Gamma(l-2a+1)) T^{1-a}
///   second = l^2/(l+1-2a) (Gamma(l-a)/Gamma(l+1-2a))^2 T^{1-2a}
/// These are returned exactly as quoted; they do not agree with direct
/// quadrature of rl_right_derivative_phi (see tests/test_frac_ops.cpp).
struct TestFunctionIntegrals {
  double first;
  double second;
};

TestFunctionIntegrals quoted_test_function_integrals(const PowerTestFunction& phi,
                                                     FractionalOrder order);

}  // namespace fracburgers
