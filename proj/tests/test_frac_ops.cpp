#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fracburgers/frac_ops.hpp"
#include "fracburgers/specfun.hpp"
#include "oracles.hpp"

using namespace fracburgers;

namespace {

// Caputo derivative of a smooth f by quadrature of its defining integral.
double caputo_by_quadrature(const std::function<double(double)>& fdot, double alpha, double t) {
  return oracles::integrate_right_singular(fdot, 0.0, t, alpha) / std::tgamma(1.0 - alpha);
}

double observed_order(double coarse_error, double fine_error) {
  return std::log2(coarse_error / fine_error);
}

}  // namespace

TEST_CASE("fractional order validation") {
  CHECK_NOTHROW(FractionalOrder(0.5));
  CHECK(FractionalOrder(1.0).is_classical());
  CHECK_THROWS_AS(FractionalOrder(0.0), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder(1.2), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder(std::nan("")), std::invalid_argument);
}

TEST_CASE("time grid construction") {
  const TimeGrid g = TimeGrid::covering(0.1, 1.0);
  CHECK(g.count == 10);
  CHECK(g.last() == doctest::Approx(1.0));
  CHECK(TimeGrid::covering(0.3, 1.0).count == 4);
  CHECK_THROWS_AS(TimeGrid(0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(TimeGrid(0.1, 0), std::invalid_argument);

  const std::vector<double> uniform = {0.5, 0.75, 1.0, 1.25};
  const TimeGrid u = TimeGrid::from_nodes(uniform);
  CHECK(u.step == doctest::Approx(0.25));
  CHECK(u.origin == 0.5);
  const std::vector<double> ragged = {0.0, 0.1, 0.25, 0.3};
  CHECK_THROWS_AS(TimeGrid::from_nodes(ragged), std::invalid_argument);
}

TEST_CASE("caputo of a constant vanishes") {
  const auto f = sample(TimeGrid(0.01, 200), [](double) { return 5.0; });
  for (double a : {0.1, 0.5, 0.9}) {
    const auto d = caputo_left(f, FractionalOrder(a));
    for (std::size_t j = 0; j < d.size(); ++j) CHECK(d[j] == 0.0);
  }
}

TEST_CASE("caputo closed forms for f(t) = t") {
  // The closed form t^{1-a}/Gamma(2-a) is checked against quadrature of the
  // defining integral before it is used as the reference.
  for (double a : {0.25, 0.5, 0.75}) {
    for (double t : {0.3, 1.0, 2.0}) {
      const double closed = std::pow(t, 1.0 - a) / std::tgamma(2.0 - a);
      const double quad = caputo_by_quadrature([](double) { return 1.0; }, a, t);
      CHECK(oracles::relative_error(quad, closed) <= 1e-12);
    }
  }
  // Frozen from mpmath: 1/Gamma(1.5) and 2^0.75/Gamma(1.75).
  const auto f1 = sample(TimeGrid(0.01, 100), [](double t) { return t; });
  CHECK(oracles::relative_error(caputo_left(f1, FractionalOrder(0.5))[100], 1.1283791670955125739) <= 1e-12);
  const auto f2 = sample(TimeGrid(0.02, 100), [](double t) { return t; });
  CHECK(oracles::relative_error(caputo_left(f2, FractionalOrder(0.25))[100], 1.8299003401582030858) <= 1e-12);
}

TEST_CASE("caputo rejects the classical order") {
  const auto f = sample(TimeGrid(0.1, 10), [](double t) { return t; });
  CHECK_THROWS_AS(caputo_left(f, FractionalOrder(1.0)), std::invalid_argument);
}

TEST_CASE("caputo is exact for piecewise-linear data") {
  // Kinked function: slope 1 on [0, 1], slope -2 afterwards. The exact Caputo
  // derivative of the interpolant is computed piecewise in closed form.
  const double a = 0.4;
  const auto f = sample(TimeGrid(0.05, 60), [](double t) { return t <= 1.0 ? t : 1.0 - 2.0 * (t - 1.0); });
  const auto d = caputo_left(f, FractionalOrder(a));
  for (std::size_t n = 1; n < f.size(); ++n) {
    const double t = f.grid.node(n);
    double exact = std::pow(t, 1.0 - a);
    if (t > 1.0) exact -= 3.0 * std::pow(t - 1.0, 1.0 - a);
    exact /= std::tgamma(2.0 - a);
    CHECK(std::abs(d[n] - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("caputo is linear and ignores constant shifts") {
  auto gen = oracles::rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const TimeGrid grid(0.01, 150);
  for (int trial = 0; trial < 20; ++trial) {
    const double p = dist(gen), q = dist(gen), r = dist(gen), s = dist(gen);
    const double ca = dist(gen), cb = dist(gen), shift = 10.0 * dist(gen);
    const FractionalOrder order(0.05 + 0.9 * (trial / 20.0));
    const auto f = sample(grid, [&](double t) { return std::sin(p * t) + q * t * t; });
    const auto g = sample(grid, [&](double t) { return std::exp(r * t) - s * t; });
    const auto combo = sample(grid, [&](double t) {
      return ca * (std::sin(p * t) + q * t * t) + cb * (std::exp(r * t) - s * t);
    });
    const auto shifted = sample(grid, [&](double t) { return std::sin(p * t) + q * t * t + shift; });

    const auto df = caputo_left(f, order);
    const auto dg = caputo_left(g, order);
    const auto dc = caputo_left(combo, order);
    const auto ds = caputo_left(shifted, order);
    for (std::size_t n = 0; n < grid.size(); ++n) {
      const double want = ca * df[n] + cb * dg[n];
      CHECK(std::abs(dc[n] - want) <= 1e-10 * std::max(1.0, std::abs(want)));
      CHECK(std::abs(ds[n] - df[n]) <= 1e-10 * std::max(1.0, std::abs(df[n])));
    }
  }
}

TEST_CASE("caputo converges at order 2 - alpha for t^2") {
  for (double a : {0.25, 0.5, 0.75}) {
    auto max_error = [a](std::size_t n) {
      const auto f = sample(TimeGrid(1.0 / n, n), [](double t) { return t * t; });
      const auto d = caputo_left(f, FractionalOrder(a));
      double err = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double t = f.grid.node(j);
        err = std::max(err, std::abs(d[j] - 2.0 * std::pow(t, 2.0 - a) / std::tgamma(3.0 - a)));
      }
      return err;
    };
    const double order = observed_order(max_error(200), max_error(400));
    CHECK(order >= 2.0 - a - 0.2);
  }
}

TEST_CASE("caputo time rescaling identity") {
  // f_s(t) = f(s t) has Caputo derivative s^a (D^a f)(s t).
  auto f = [](double t) { return std::sin(t) + 0.5 * t * t; };
  const double s = 2.0;
  for (double a : {0.5, 0.75}) {
    auto discrepancy = [&](std::size_t n) {
      const double h = 1.0 / n;
      const auto fs = sample(TimeGrid(h, n), [&](double t) { return f(s * t); });
      const auto fo = sample(TimeGrid(h, 2 * n), f);
      const auto ds = caputo_left(fs, FractionalOrder(a));
      const auto dfo = caputo_left(fo, FractionalOrder(a));
      double worst = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        worst = std::max(worst, std::abs(ds[k] - std::pow(s, a) * dfo[2 * k]));
      }
      return worst;
    };
    const double coarse = discrepancy(100);
    const double fine = discrepancy(200);
    CHECK(fine < coarse);
    CHECK(fine < 5e-3);
  }
}

TEST_CASE("classical derivative") {
  const TimeGrid grid(0.1, 20);
  const auto c = classical_derivative(sample(grid, [](double) { return 3.0; }));
  const auto lin = classical_derivative(sample(grid, [](double t) { return t; }));
  const auto sq = classical_derivative(sample(grid, [](double t) { return t * t; }));
  for (std::size_t n = 1; n < grid.size(); ++n) {
    CHECK(c[n] == 0.0);
    CHECK(lin[n] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sq[n] == doctest::Approx(2.0 * grid.node(n) - grid.step).epsilon(1e-12));
  }
  CHECK(sq[0] == 0.0);
}

TEST_CASE("RL integral closed forms") {
  for (double a : {0.3, 0.7}) {
    const auto one = sample(TimeGrid(0.017, 100), [](double) { return 1.0; });
    const auto I = rl_fractional_integral(one, FractionalOrder(a));
    CHECK(I[0] == 0.0);
    for (std::size_t n = 1; n < one.size(); ++n) {
      const double t = one.grid.node(n);
      CHECK(oracles::relative_error(I[n], std::pow(t, a) / std::tgamma(a + 1.0)) <= 1e-12);
    }
  }
  // mpmath quadrature at t = 1.7: alpha = 0.7 -> 1.5955962217855797596
  const auto one = sample(TimeGrid(0.017, 100), [](double) { return 1.0; });
  CHECK(oracles::relative_error(rl_fractional_integral(one, FractionalOrder(0.7))[100],
                                1.5955962217855797596) <= 1e-12);

  const auto zero = sample(TimeGrid(0.1, 10), [](double) { return 0.0; });
  const auto Z = rl_fractional_integral(zero, FractionalOrder(0.4));
  for (std::size_t n = 0; n < zero.size(); ++n) CHECK(Z[n] == 0.0);

  const auto lin = sample(TimeGrid(0.02, 100), [](double t) { return t; });
  CHECK(rl_fractional_integral(lin, FractionalOrder(1.0))[100] == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("RL integral is exact on piecewise-linear data") {
  const double a = 0.35;
  const auto g = sample(TimeGrid(0.05, 40), [](double t) { return 1.0 + 2.0 * t; });
  const auto I = rl_fractional_integral(g, FractionalOrder(a));
  for (std::size_t n = 1; n < g.size(); ++n) {
    const double t = g.grid.node(n);
    const double exact = std::pow(t, a) / std::tgamma(a + 1.0) + 2.0 * std::pow(t, a + 1.0) / std::tgamma(a + 2.0);
    CHECK(oracles::relative_error(I[n], exact) <= 1e-12);
  }
}

TEST_CASE("RL integral of the caputo derivative recovers f - f(0)") {
  auto f = [](double t) { return std::exp(t) + std::sin(3.0 * t); };
  for (double a : {0.3, 0.6, 0.9}) {
    auto error = [&](std::size_t n) {
      const auto s = sample(TimeGrid(1.0 / n, n), f);
      const auto back = rl_fractional_integral(caputo_left(s, FractionalOrder(a)), FractionalOrder(a));
      double worst = 0.0;
      for (std::size_t j = 0; j <= n; ++j) worst = std::max(worst, std::abs(back[j] - (s[j] - s[0])));
      return worst;
    };
    const double coarse = error(200);
    const double fine = error(400);
    CHECK(observed_order(coarse, fine) >= 0.9);
  }
}

TEST_CASE("weights agree with long double direct evaluation") {
  const long double a = 0.37L;
  const std::size_t n = 3000;
  const auto c = weights::trapezoid_interior<double>(0.37, n);
  const auto r = weights::rectangle<double>(0.37, n);
  const auto b = weights::l1<double>(0.37, n);
  for (std::size_t k : {1u, 2u, 3u, 17u, 250u, 2999u}) {
    const long double kk = k;
    const long double p = a + 1.0L;
    const long double direct = std::pow(kk + 1, p) - 2 * std::pow(kk, p) + std::pow(kk - 1, p);
    CHECK(std::abs(c[k] - static_cast<double>(direct)) <= 1e-9 * std::abs(static_cast<double>(direct)));
    const long double rect = std::pow(kk, a) - std::pow(kk - 1, a);
    CHECK(oracles::relative_error(r[k], static_cast<double>(rect)) <= 1e-12);
    const long double l1 = std::pow(kk + 1, 1 - a) - std::pow(kk, 1 - a);
    CHECK(oracles::relative_error(b[k], static_cast<double>(l1)) <= 1e-12);
  }
  for (std::size_t m : {1u, 2u, 5u, 40u}) {
    const long double mm = m;
    const long double direct = std::pow(mm - 1, a + 1) - (mm - 1 - a) * std::pow(mm, a);
    CHECK(oracles::relative_error(weights::trapezoid_start<double>(0.37, m), static_cast<double>(direct)) <= 1e-10);
  }
}

TEST_CASE("long double and double kernels agree") {
  const TimeGrid grid(0.01, 300);
  const auto fd = sample<double>(grid, [](double t) { return std::cos(2.0 * t); });
  const auto fl = sample<long double>(grid, [](double t) { return std::cos(2.0 * t); });
  const auto dd = caputo_left(fd, FractionalOrder(0.6));
  const auto dl = caputo_left(fl, FractionalOrder(0.6));
  for (std::size_t n = 0; n < grid.size(); ++n) {
    CHECK(std::abs(dd[n] - static_cast<double>(dl[n])) <= 1e-12 * std::max(1.0, std::abs(dd[n])));
  }
}

TEST_CASE("power test function") {
  const PowerTestFunction phi(2.0, 4.0);
  CHECK(phi_value(phi, 0.0) == 1.0);
  CHECK(phi_value(phi, 4.0) == 0.0);
  CHECK(phi_value(phi, 2.0) == 0.25);
  CHECK(phi_value(phi, 7.0) == 0.0);
  CHECK_THROWS_AS(PowerTestFunction(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PowerTestFunction(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("right RL derivative of the test function") {
  // Closed form vs quadrature of int_t^T phi(s)(s-t)^{-a} ds, differentiated numerically.
  auto by_quadrature = [](const PowerTestFunction& phi, double a, double t) {
    auto inner = [&](double tt) {
      return oracles::integrate_left_singular([&](double s) { return phi_value(phi, s); }, tt, phi.horizon, a);
    };
    return -oracles::derivative(inner, t, 1e-3) / std::tgamma(1.0 - a);
  };
  const PowerTestFunction p2(2.0, 1.0);
  const PowerTestFunction p3(3.0, 2.0);
  const FractionalOrder half(0.5);

  CHECK(oracles::relative_error(rl_right_derivative_phi(p2, half, 0.0), 1.5045055561273500985) <= 1e-12);
  CHECK(oracles::relative_error(rl_right_derivative_phi(p2, half, 0.0), 2.0 / std::tgamma(2.5)) <= 1e-12);
  const double expected3 = std::tgamma(4.0) / std::tgamma(3.5) * std::pow(2.0, -0.5) * std::pow(0.5, 2.5);
  CHECK(oracles::relative_error(rl_right_derivative_phi(p3, half, 1.0), expected3) <= 1e-12);
  CHECK(oracles::relative_error(rl_right_derivative_phi(p3, half, 1.0), 0.22567583341910251478) <= 1e-12);

  for (double t : {0.1, 0.4, 0.8}) {
    CHECK(oracles::relative_error(rl_right_derivative_phi(p2, half, t), by_quadrature(p2, 0.5, t)) <= 1e-8);
  }
  CHECK(oracles::relative_error(rl_right_derivative_phi(p3, FractionalOrder(0.3), 1.2),
                                by_quadrature(p3, 0.3, 1.2)) <= 1e-8);

  CHECK(rl_right_derivative_phi(p2, half, 1.0 - 1e-12) < 1e-5);
  CHECK_THROWS_AS(rl_right_derivative_phi(p2, half, 1.0), std::invalid_argument);
}

TEST_CASE("quoted test-function integrals: homogeneity and discrepancy report") {
  const FractionalOrder half(0.5);
  for (double a : {0.2, 0.5, 0.8}) {
    const FractionalOrder order(a);
    const auto base = quoted_test_function_integrals(PowerTestFunction(2.5, 1.3), order);
    const auto doubled = quoted_test_function_integrals(PowerTestFunction(2.5, 2.6), order);
    CHECK(doubled.first / base.first == doctest::Approx(std::pow(2.0, 1.0 - a)).epsilon(1e-13));
    CHECK(doubled.second / base.second == doctest::Approx(std::pow(2.0, 1.0 - 2.0 * a)).epsilon(1e-13));
  }

  // Quadrature of the closed-form derivative, which itself matches direct
  // differentiation of the defining integral (case above).
  const PowerTestFunction phi(2.0, 1.0);
  const auto quoted = quoted_test_function_integrals(phi, half);
  const double q1 = oracles::integrate([&](double t) { return rl_right_derivative_phi(phi, half, std::min(t, 1.0 - 1e-15)); }, 0.0, 1.0);
  const double q2 = oracles::integrate(
      [&](double t) {
        const double tt = std::min(t, 1.0 - 1e-15);
        const double d = rl_right_derivative_phi(phi, half, tt);
        return d * d / phi_value(phi, tt);
      },
      0.0, 1.0);
  const double rel1 = (quoted.first - q1) / q1;
  const double rel2 = (quoted.second - q2) / q2;
  std::printf("[test-function integrals] lambda=2 alpha=0.5 T=1\n"
              "  first : quoted %.12f quadrature %.12f relative discrepancy %+.4e\n"
              "  second: quoted %.12f quadrature %.12f relative discrepancy %+.4e\n",
              quoted.first, q1, rel1, quoted.second, q2, rel2);

  // mpmath values (tests/oracles/compute_frozen_values.py)
  CHECK(oracles::relative_error(quoted.first, 0.70898154036220641092) <= 1e-12);
  CHECK(oracles::relative_error(quoted.second, 1.5707963267948966192) <= 1e-12);
  CHECK(oracles::relative_error(q1, 0.60180222245094003941) <= 1e-9);
  CHECK(oracles::relative_error(q2, 1.1317684842090334988) <= 1e-9);

  CHECK_THROWS(quoted_test_function_integrals(phi, FractionalOrder(1.0)));
}
