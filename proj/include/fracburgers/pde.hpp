#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include <Eigen/Core>

#include "fracburgers/fode.hpp"
#include "fracburgers/frac_ops.hpp"

namespace fracburgers::pde {

/// Uniform cells on [x_min, x_max]; values live at cell centers.
struct SpatialGrid {
  double x_min;
  double x_max;
  std::size_t cells;

  SpatialGrid(double x_min_, double x_max_, std::size_t cells_);

  double dx() const noexcept { return (x_max - x_min) / static_cast<double>(cells); }
  double center(std::size_t i) const noexcept {
    return x_min + (static_cast<double>(i) + 0.5) * dx();
  }
  Eigen::VectorXd centers() const;
};

/// Boundary handling for the two ghost cells. Dirichlet callbacks receive the
/// ghost-cell center (x_min - dx/2 or x_max + dx/2) and the time of the slice
/// the fluxes are built from.
class BoundaryRule {
 public:
  using Callback = std::function<double(double x, double t)>;

  static BoundaryRule periodic() { return BoundaryRule(nullptr); }
  static BoundaryRule dirichlet(Callback value);

  bool is_periodic() const noexcept { return !value_; }
  double value(double x, double t) const { return value_(x, t); }

 private:
  explicit BoundaryRule(Callback value) : value_(std::move(value)) {}
  Callback value_;
};

/// Velocity law v = c_tilde (rho_max - rho) of the market model. beta is the
/// memory-kernel exponent and must equal 1 - alpha.
struct MarketParams {
  double rho_max = 1.0;
  double c_tilde = 1.0;
  double beta;

  explicit MarketParams(FractionalOrder order, double rho_max_ = 1.0, double c_tilde_ = 1.0);
};

struct PdeConfig {
  double step = 1e-3;
  double horizon = 0.5;
  double escape_threshold = 1e6;
};

using SliceMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Every time slice of a solve; the Caputo memory term needs all of them.
/// When escaped, the last slice is the first one with |value| above the threshold.
struct FieldHistory {
  SpatialGrid spatial;
  TimeGrid time;
  SliceMatrix slices;  // rows = time nodes, cols = cells
  fode::Status status = fode::Status::completed;

  bool escaped() const noexcept { return status == fode::Status::escaped; }
  std::size_t steps() const noexcept { return time.count; }
  auto slice(std::size_t n) const { return slices.row(static_cast<Eigen::Index>(n)); }
};

/// Largest CFL number the explicit L1 update accepts: min(0.5, 2 - 2^{1-alpha}).
/// The second term keeps the newest-slice coefficient of the update nonnegative.
double cfl_limit(FractionalOrder order);

/// ^C D^alpha u + (u^2/2)_x = 0 with Godunov fluxes and the L1 time operator.
/// Throws CflViolation naming the first offending cell and step.
FieldHistory solve_u(const Eigen::VectorXd& u0, FractionalOrder order, const SpatialGrid& spatial,
                     const PdeConfig& config, const BoundaryRule& bc);

/// ^C D^alpha rho = (c_tilde rho (rho_max - rho))_x with the same scheme.
FieldHistory solve_rho(const Eigen::VectorXd& rho0, FractionalOrder order,
                       const SpatialGrid& spatial, const PdeConfig& config,
                       const BoundaryRule& bc, const MarketParams& params);

/// u = c_tilde (2 rho - rho_max); with the default normalization u = 2 rho - 1.
FieldHistory rho_to_u(const FieldHistory& rho, const MarketParams& params);
FieldHistory u_to_rho(const FieldHistory& u, const MarketParams& params);

/// -x v(t), v linearly interpolated between trajectory nodes.
double separable_solution(const fode::Trajectory& v, double x, double t);

/// (1 - x v(t)) / 2.
double market_density(const fode::Trajectory& v, double x, double t);

/// Dirichlet data taken from the exact separable solution built on `v`
/// (Burgers form -x v(t); market form (1 - x v(t)) / 2).
BoundaryRule separable_boundary_u(std::shared_ptr<const fode::Trajectory> v);
BoundaryRule separable_boundary_rho(std::shared_ptr<const fode::Trajectory> v);

/// Lazy description of u^(lambda)(x, t) = u(lambda^alpha x, lambda t). Holds a
/// pointer to the source history, which must outlive it.
struct RescaledField {
  const FieldHistory* source;
  double lambda;
  double alpha;
  SpatialGrid spatial;  // cell centers of u^(lambda): source centers / lambda^alpha
  TimeGrid time;        // nodes of u^(lambda): source nodes / lambda

  /// Bilinear interpolation of the source at (lambda^alpha x, lambda t).
  double operator()(double x, double t) const;
  double initial(double x) const { return (*this)(x, 0.0); }
  /// Blow-up time of the rescaled field given the source's.
  double blowup_time(double source_blowup) const { return source_blowup / lambda; }
};

RescaledField rescale_field(const FieldHistory& u, double lambda, FractionalOrder order);

}  // namespace fracburgers::pde
