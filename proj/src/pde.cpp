#include "fracburgers/pde.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracburgers/errors.hpp"
#include "fracburgers/specfun.hpp"

namespace fracburgers::pde {
namespace {

/// Godunov flux for f(u) = u^2 / 2.
struct BurgersFlux {
  static double godunov(double left, double right) {
    const double l = std::max(left, 0.0);
    const double r = std::min(right, 0.0);
    return 0.5 * std::max(l * l, r * r);
  }
  double interface(double left, double right) const { return godunov(left, right); }
  double speed(double u) const { return std::abs(u); }
};

/// Flux -c rho (rho_max - rho), written as the affine image of the Burgers
/// Godunov flux under u = c (2 rho - rho_max).
struct MarketFlux {
  double rho_max;
  double c_tilde;

  double to_u(double rho) const { return c_tilde * (2.0 * rho - rho_max); }
  double interface(double left, double right) const {
    return BurgersFlux::godunov(to_u(left), to_u(right)) / (2.0 * c_tilde) -
           0.25 * c_tilde * rho_max * rho_max;
  }
  double speed(double rho) const { return std::abs(to_u(rho)); }
};

template <typename Flux>
FieldHistory march(const Eigen::VectorXd& initial, FractionalOrder order,
                   const SpatialGrid& spatial, const PdeConfig& config, const BoundaryRule& bc,
                   const Flux& flux) {
  if (static_cast<std::size_t>(initial.size()) != spatial.cells) {
    throw std::invalid_argument("initial datum size does not match the spatial grid");
  }
  if (!initial.allFinite()) throw std::invalid_argument("initial datum must be finite");
  if (!(config.escape_threshold > 0.0)) throw std::invalid_argument("escape threshold must be > 0");

  const TimeGrid time = TimeGrid::covering(config.step, config.horizon);
  const std::size_t N = time.count;
  const auto M = static_cast<Eigen::Index>(spatial.cells);
  const double alpha = order.value();
  const auto b = weights::l1(alpha, N);
  const double mu = specfun::gamma(2.0 - alpha) * std::pow(time.step, alpha);
  const double dx = spatial.dx();
  const double limit = cfl_limit(order);
  const double x_left = spatial.x_min - 0.5 * dx;
  const double x_right = spatial.x_max + 0.5 * dx;

  SliceMatrix u(static_cast<Eigen::Index>(N + 1), M);
  u.row(0) = initial.transpose();
  Eigen::RowVectorXd fluxes(M + 1);
  Eigen::RowVectorXd memory(M);

  std::size_t last = N;
  bool escaped = false;
  for (std::size_t n = 1; n <= N; ++n) {
    const auto row = static_cast<Eigen::Index>(n);
    const auto prev = u.row(row - 1);
    const double t_prev = time.node(n - 1);

    for (Eigen::Index i = 0; i < M; ++i) {
      const double number = mu * flux.speed(prev(i)) / dx;
      if (number > limit) throw CflViolation(static_cast<std::size_t>(i), n, number, limit);
    }

    const double ghost_left = bc.is_periodic() ? prev(M - 1) : bc.value(x_left, t_prev);
    const double ghost_right = bc.is_periodic() ? prev(0) : bc.value(x_right, t_prev);
    fluxes(0) = flux.interface(ghost_left, prev(0));
    for (Eigen::Index i = 1; i < M; ++i) fluxes(i) = flux.interface(prev(i - 1), prev(i));
    fluxes(M) = flux.interface(prev(M - 1), ghost_right);

    // sum_{j=1}^{n-1} b_j (u^{n-j} - u^{n-j-1}), newest increment first
    memory.setZero();
    if (!order.is_classical()) {
      for (std::size_t j = 1; j < n; ++j) {
        const auto k = static_cast<Eigen::Index>(n - j);
        memory += b[j] * (u.row(k) - u.row(k - 1));
      }
    }

    u.row(row) = prev - memory - (mu / dx) * (fluxes.tail(M) - fluxes.head(M));

    const auto current = u.row(row);
    if (!current.allFinite() || current.cwiseAbs().maxCoeff() > config.escape_threshold) {
      last = n;
      escaped = true;
      break;
    }
  }

  FieldHistory out{spatial, TimeGrid(time.step, last, time.origin),
                   u.topRows(static_cast<Eigen::Index>(last + 1)),
                   escaped ? fode::Status::escaped : fode::Status::completed};
  return out;
}

FieldHistory map_affine(const FieldHistory& in, double scale, double shift) {
  FieldHistory out = in;
  out.slices = (scale * in.slices.array() + shift).matrix();
  return out;
}

}  // namespace

SpatialGrid::SpatialGrid(double x_min_, double x_max_, std::size_t cells_)
    : x_min(x_min_), x_max(x_max_), cells(cells_) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw std::invalid_argument("spatial grid needs finite x_min < x_max");
  }
  if (cells < 8) throw std::invalid_argument("spatial grid needs at least 8 cells");
}

Eigen::VectorXd SpatialGrid::centers() const {
  Eigen::VectorXd x(static_cast<Eigen::Index>(cells));
  for (std::size_t i = 0; i < cells; ++i) x(static_cast<Eigen::Index>(i)) = center(i);
  return x;
}

BoundaryRule BoundaryRule::dirichlet(Callback value) {
  if (!value) throw std::invalid_argument("dirichlet boundary needs a callback");
  return BoundaryRule(std::move(value));
}

MarketParams::MarketParams(FractionalOrder order, double rho_max_, double c_tilde_)
    : rho_max(rho_max_), c_tilde(c_tilde_), beta(1.0 - order.value()) {
  if (!(rho_max > 0.0) || !(c_tilde > 0.0)) {
    throw std::invalid_argument("market parameters need rho_max > 0 and c_tilde > 0");
  }
}

double cfl_limit(FractionalOrder order) {
  return std::min(0.5, 2.0 - std::pow(2.0, 1.0 - order.value()));
}

FieldHistory solve_u(const Eigen::VectorXd& u0, FractionalOrder order, const SpatialGrid& spatial,
                     const PdeConfig& config, const BoundaryRule& bc) {
  return march(u0, order, spatial, config, bc, BurgersFlux{});
}

FieldHistory solve_rho(const Eigen::VectorXd& rho0, FractionalOrder order,
                       const SpatialGrid& spatial, const PdeConfig& config,
                       const BoundaryRule& bc, const MarketParams& params) {
  if (std::abs(params.beta - (1.0 - order.value())) > 1e-12) {
    throw std::invalid_argument("market kernel exponent beta must equal 1 - alpha");
  }
  return march(rho0, order, spatial, config, bc, MarketFlux{params.rho_max, params.c_tilde});
}

FieldHistory rho_to_u(const FieldHistory& rho, const MarketParams& params) {
  return map_affine(rho, 2.0 * params.c_tilde, -params.c_tilde * params.rho_max);
}

FieldHistory u_to_rho(const FieldHistory& u, const MarketParams& params) {
  return map_affine(u, 0.5 / params.c_tilde, 0.5 * params.rho_max);
}

double separable_solution(const fode::Trajectory& v, double x, double t) { return -x * v.at(t); }

double market_density(const fode::Trajectory& v, double x, double t) {
  return 0.5 * (1.0 - x * v.at(t));
}

BoundaryRule separable_boundary_u(std::shared_ptr<const fode::Trajectory> v) {
  if (!v) throw std::invalid_argument("separable boundary needs a trajectory");
  return BoundaryRule::dirichlet(
      [v = std::move(v)](double x, double t) { return separable_solution(*v, x, t); });
}

BoundaryRule separable_boundary_rho(std::shared_ptr<const fode::Trajectory> v) {
  if (!v) throw std::invalid_argument("separable boundary needs a trajectory");
  return BoundaryRule::dirichlet(
      [v = std::move(v)](double x, double t) { return market_density(*v, x, t); });
}

double RescaledField::operator()(double x, double t) const {
  const FieldHistory& src = *source;
  const double xs = std::pow(lambda, alpha) * x;
  const double ts = lambda * t;

  const double tpos = (ts - src.time.origin) / src.time.step;
  if (!(tpos >= -1e-12) || !(tpos <= static_cast<double>(src.time.count) + 1e-9)) {
    throw std::out_of_range("rescaled time outside the source history");
  }
  const double tc = std::clamp(tpos, 0.0, static_cast<double>(src.time.count));
  const auto n0 = std::min(static_cast<std::size_t>(tc), src.time.count > 0 ? src.time.count - 1 : 0);
  const double wt = src.time.count > 0 ? tc - static_cast<double>(n0) : 0.0;

  const double xpos = (xs - src.spatial.x_min) / src.spatial.dx() - 0.5;
  const double last_cell = static_cast<double>(src.spatial.cells - 1);
  const double xc = std::clamp(xpos, 0.0, last_cell);
  const auto i0 = std::min(static_cast<std::size_t>(xc), src.spatial.cells - 2);
  const double wx = xc - static_cast<double>(i0);

  auto at = [&](std::size_t n, std::size_t i) {
    return src.slices(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i));
  };
  const std::size_t n1 = std::min(n0 + 1, src.time.count);
  const double lo = (1.0 - wx) * at(n0, i0) + wx * at(n0, i0 + 1);
  const double hi = (1.0 - wx) * at(n1, i0) + wx * at(n1, i0 + 1);
  return (1.0 - wt) * lo + wt * hi;
}

RescaledField rescale_field(const FieldHistory& u, double lambda, FractionalOrder order) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("rescaling factor lambda must be positive");
  }
  const double a = order.value();
  const double space_scale = std::pow(lambda, a);
  return RescaledField{&u, lambda, a,
                       SpatialGrid(u.spatial.x_min / space_scale, u.spatial.x_max / space_scale,
                                   u.spatial.cells),
                       TimeGrid(u.time.step / lambda, u.time.count, u.time.origin / lambda)};
}

}  // namespace fracburgers::pde
