#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fracburgers/frac_ops.hpp"

namespace fracburgers::fode {

/// Right-hand side f of  ^C D^alpha v = f(v).
class Nonlinearity {
 public:
  enum class Kind { square, capped_square, zero, custom };

  static Nonlinearity square() { return Nonlinearity(Kind::square, 0.0, {}); }
  /// f_M(r) = min(r^2, M^2).
  static Nonlinearity capped_square(double cap);
  static Nonlinearity zero() { return Nonlinearity(Kind::zero, 0.0, {}); }
  static Nonlinearity custom(std::function<double(double)> fn);

  double operator()(double r) const;

  Kind kind() const noexcept { return kind_; }
  double cap() const noexcept { return cap_; }

 private:
  Nonlinearity(Kind kind, double cap, std::function<double(double)> fn)
      : kind_(kind), cap_(cap), fn_(std::move(fn)) {}

  Kind kind_;
  double cap_;
  std::function<double(double)> fn_;
};

struct SolverConfig {
  double step = 1e-3;
  double horizon = 1.0;
  double escape_threshold = 1e6;
  int corrector_sweeps = 1;

  /// Throws std::invalid_argument when the configuration cannot be marched.
  void validate(double v0) const;
};

enum class Status { completed, escaped };

/// Solved samples plus how the march ended. When escaped, `samples` stops at
/// the escape node: values before it are finite, the last one is the first
/// sample with |v| above the threshold (and may be +inf or nan).
struct Trajectory {
  SampledFunction samples;
  Status status = Status::completed;

  bool escaped() const noexcept { return status == Status::escaped; }
  std::size_t last_node() const noexcept { return samples.grid.count; }
  /// Time of the escape node. Only meaningful when escaped().
  double escape_time() const noexcept { return samples.grid.last(); }
  /// Linear interpolation between nodes; throws outside the computed range.
  double at(double t) const;
};

/// Marches ^C D^alpha v = f(v), v(0) = v0 through its Volterra form with a
/// fractional Adams predictor (product rectangle) and corrector (product
/// trapezoid). alpha = 1 uses classical RK4.
Trajectory solve(const Nonlinearity& f, double v0, FractionalOrder order,
                 const SolverConfig& config);

/// solve() with the capped square nonlinearity min(v^2, M^2), M >= 4.
Trajectory solve_capped(double cap, double v0, FractionalOrder order,
                        const SolverConfig& config);

/// Largest |v_n - (v0 + I_trap[f(v)](t_n))| / max(1, |v_n|) over the trajectory,
/// i.e. how far the samples are from the discrete Volterra fixed point.
double volterra_residual(const Trajectory& trajectory, const Nonlinearity& f, double v0,
                         FractionalOrder order);

struct LadderConfig {
  double finest_step = 1e-4;
  int halvings = 3;            // ladder has halvings + 1 step sizes
  double max_threshold = 1e6;  // thresholds max/100^k, k = thresholds-1..0
  int threshold_levels = 3;
  double horizon = 2.0;
  int corrector_sweeps = 1;
};

struct TraceEntry {
  double step;
  double threshold;
  double escape_time;
};

struct BlowupEstimate {
  double t_lo;
  double t_hi;
  double extrapolated;
  std::vector<TraceEntry> refinement_trace;
};

/// Brackets the blow-up time of ^C D^alpha v = v^2, v(0) = 1 by threshold
/// escapes along a (step, threshold) ladder. Throws NoBlowupDetected when the
/// finest run never escapes before the horizon.
BlowupEstimate estimate_blowup(FractionalOrder order, const LadderConfig& seed = {});

/// Same ladder started from v(0) = v0 instead of 1; the scaling checks use
/// v0 = lambda^alpha.
BlowupEstimate estimate_blowup_from(double v0, FractionalOrder order, const LadderConfig& seed);

}  // namespace fracburgers::fode
