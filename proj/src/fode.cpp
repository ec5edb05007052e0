#include "fracburgers/fode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fracburgers/errors.hpp"
#include "fracburgers/specfun.hpp"

namespace fracburgers::fode {
namespace {

using detail::CompensatedSum;

bool escapes(double v, double threshold) { return !std::isfinite(v) || std::abs(v) > threshold; }

Trajectory finish(const TimeGrid& grid, std::vector<double>& v, bool escaped) {
  const TimeGrid used(grid.step, v.size() - 1, grid.origin);
  Eigen::VectorXd values = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
  return Trajectory{SampledFunction(used, std::move(values)),
                    escaped ? Status::escaped : Status::completed};
}

Trajectory solve_classical(const Nonlinearity& f, double v0, const SolverConfig& config) {
  const TimeGrid grid = TimeGrid::covering(config.step, config.horizon);
  const double h = grid.step;
  std::vector<double> v;
  v.reserve(grid.size());
  v.push_back(v0);
  for (std::size_t n = 1; n <= grid.count; ++n) {
    const double y = v.back();
    const double k1 = f(y);
    const double k2 = f(y + 0.5 * h * k1);
    const double k3 = f(y + 0.5 * h * k2);
    const double k4 = f(y + h * k3);
    const double next = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    v.push_back(next);
    if (escapes(next, config.escape_threshold)) return finish(grid, v, true);
  }
  return finish(grid, v, false);
}

Trajectory solve_fractional(const Nonlinearity& f, double v0, double alpha,
                            const SolverConfig& config) {
  const TimeGrid grid = TimeGrid::covering(config.step, config.horizon);
  const std::size_t N = grid.count;
  const auto rect = weights::rectangle(alpha, N);
  const auto trap = weights::trapezoid_interior(alpha, N);
  const double h_alpha = std::pow(grid.step, alpha);
  const double predictor_scale = h_alpha / specfun::gamma(alpha + 1.0);
  const double corrector_scale = h_alpha / specfun::gamma(alpha + 2.0);

  std::vector<double> v;
  std::vector<double> fv;
  v.reserve(N + 1);
  fv.reserve(N + 1);
  v.push_back(v0);
  fv.push_back(f(v0));

  for (std::size_t n = 1; n <= N; ++n) {
    CompensatedSum<double> predictor;
    CompensatedSum<double> history;
    predictor.add(rect[n] * fv[0]);
    history.add(weights::trapezoid_start(alpha, n) * fv[0]);
    for (std::size_t j = 1; j < n; ++j) {
      predictor.add(rect[n - j] * fv[j]);
      history.add(trap[n - j] * fv[j]);
    }
    double next = v0 + predictor_scale * predictor.value();
    const double hist = history.value();
    for (int sweep = 0; sweep < config.corrector_sweeps; ++sweep) {
      next = v0 + corrector_scale * (hist + f(next));
    }
    v.push_back(next);
    if (escapes(next, config.escape_threshold)) return finish(grid, v, true);
    fv.push_back(f(next));
  }
  return finish(grid, v, false);
}

}  // namespace

Nonlinearity Nonlinearity::capped_square(double cap) {
  if (!(cap > 0.0) || !std::isfinite(cap)) {
    throw std::invalid_argument("capped square needs a finite cap M > 0");
  }
  return Nonlinearity(Kind::capped_square, cap, {});
}

Nonlinearity Nonlinearity::custom(std::function<double(double)> fn) {
  if (!fn) throw std::invalid_argument("custom nonlinearity needs a callable");
  return Nonlinearity(Kind::custom, 0.0, std::move(fn));
}

double Nonlinearity::operator()(double r) const {
  switch (kind_) {
    case Kind::square:
      return r * r;
    case Kind::capped_square:
      return std::min(r * r, cap_ * cap_);
    case Kind::zero:
      return 0.0;
    case Kind::custom:
      return fn_(r);
  }
  return 0.0;
}

void SolverConfig::validate(double v0) const {
  if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("solver step must be > 0");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw std::invalid_argument("horizon must be > 0");
  if (!(step < horizon)) throw std::invalid_argument("solver step must be below the horizon");
  if (corrector_sweeps < 1) throw std::invalid_argument("corrector_sweeps must be >= 1");
  if (!std::isfinite(v0)) throw std::invalid_argument("initial value must be finite");
  if (!(escape_threshold > std::abs(v0))) {
    throw std::invalid_argument("escape threshold must exceed |v0|");
  }
}

double Trajectory::at(double t) const {
  const TimeGrid& g = samples.grid;
  const double pos = (t - g.origin) / g.step;
  const double last = static_cast<double>(g.count);
  if (!(pos >= -1e-12) || !(pos <= last + 1e-9)) {
    throw std::out_of_range("time " + std::to_string(t) + " outside the computed trajectory");
  }
  const double clamped = std::clamp(pos, 0.0, last);
  const auto lo = static_cast<std::size_t>(std::min(std::floor(clamped), last));
  if (static_cast<double>(lo) == clamped || lo == g.count) return samples[lo];
  const double w = clamped - static_cast<double>(lo);
  return (1.0 - w) * samples[lo] + w * samples[lo + 1];
}

Trajectory solve(const Nonlinearity& f, double v0, FractionalOrder order,
                 const SolverConfig& config) {
  config.validate(v0);
  if (f.kind() == Nonlinearity::Kind::zero) {
    const TimeGrid grid = TimeGrid::covering(config.step, config.horizon);
    return Trajectory{SampledFunction(grid, Eigen::VectorXd::Constant(
                                                static_cast<Eigen::Index>(grid.size()), v0)),
                      Status::completed};
  }
  if (order.is_classical()) return solve_classical(f, v0, config);
  return solve_fractional(f, v0, order.value(), config);
}

Trajectory solve_capped(double cap, double v0, FractionalOrder order, const SolverConfig& config) {
  if (!(cap >= 4.0)) throw std::invalid_argument("cap M must be >= 4");
  return solve(Nonlinearity::capped_square(cap), v0, order, config);
}

double volterra_residual(const Trajectory& trajectory, const Nonlinearity& f, double v0,
                         FractionalOrder order) {
  const SampledFunction& s = trajectory.samples;
  std::size_t last = s.grid.count;
  if (trajectory.escaped() && !std::isfinite(s[last])) --last;
  if (last == 0) return 0.0;

  Eigen::VectorXd fv(static_cast<Eigen::Index>(last + 1));
  for (std::size_t j = 0; j <= last; ++j) fv(static_cast<Eigen::Index>(j)) = f(s[j]);
  const SampledFunction forcing(TimeGrid(s.grid.step, last, s.grid.origin), std::move(fv));
  const SampledFunction integral = rl_fractional_integral(forcing, order);

  double worst = 0.0;
  for (std::size_t n = 1; n <= last; ++n) {
    const double rhs = v0 + integral[n];
    worst = std::max(worst, std::abs(s[n] - rhs) / std::max(1.0, std::abs(s[n])));
  }
  return worst;
}

namespace {

std::optional<double> first_crossing(const Trajectory& t, double threshold) {
  for (std::size_t j = 0; j <= t.samples.grid.count; ++j) {
    if (escapes(t.samples[j], threshold)) return t.samples.grid.node(j);
  }
  return std::nullopt;
}

}  // namespace

BlowupEstimate estimate_blowup_from(double v0, FractionalOrder order, const LadderConfig& seed) {
  if (seed.halvings < 3 || seed.threshold_levels < 3) {
    throw std::invalid_argument("blow-up ladder needs >= 3 step halvings and >= 3 threshold levels");
  }
  if (!(seed.finest_step > 0.0) || !(seed.horizon > seed.finest_step)) {
    throw std::invalid_argument("blow-up ladder needs 0 < finest step < horizon");
  }

  std::vector<double> thresholds;
  for (int k = seed.threshold_levels - 1; k >= 0; --k) {
    thresholds.push_back(seed.max_threshold / std::pow(100.0, k));
  }
  if (!(thresholds.front() > std::abs(v0))) {
    throw std::invalid_argument("smallest ladder threshold must exceed |v0|");
  }

  BlowupEstimate out{};
  // escape[k] = escape time at the largest threshold for step finest * 2^k
  std::vector<std::optional<double>> escape(static_cast<std::size_t>(seed.halvings) + 1);
  std::vector<double> finest_by_threshold;
  for (int k = seed.halvings; k >= 0; --k) {
    SolverConfig cfg;
    cfg.step = seed.finest_step * std::ldexp(1.0, k);
    cfg.horizon = seed.horizon;
    cfg.escape_threshold = thresholds.back();
    cfg.corrector_sweeps = seed.corrector_sweeps;
    const Trajectory run = solve(Nonlinearity::square(), v0, order, cfg);
    for (double x : thresholds) {
      if (auto te = first_crossing(run, x)) {
        out.refinement_trace.push_back({cfg.step, x, *te});
        if (k == 0) finest_by_threshold.push_back(*te);
      }
    }
    escape[static_cast<std::size_t>(k)] = first_crossing(run, thresholds.back());
  }
  if (!escape[0]) throw NoBlowupDetected(seed.horizon);

  const double h = seed.finest_step;
  const double e0 = *escape[0];
  double extrapolated = e0;
  double correction = 0.0;
  if (escape[1]) {
    const double d1 = e0 - *escape[1];
    correction = std::abs(d1);
    if (seed.halvings >= 2 && escape[2]) {
      const double d2 = *escape[1] - *escape[2];
      const double ratio = d2 != 0.0 ? d1 / d2 : 0.0;
      // Geometric tail of successive step-halving differences.
      if (ratio > 0.0 && ratio < 0.9) {
        extrapolated = e0 + d1 * ratio / (1.0 - ratio);
        correction = std::max(correction, std::abs(extrapolated - e0));
      }
    }
  }
  // Escape times are node times, so each carries one step of quantization.
  correction += h;
  // Escape-time gap between the two largest thresholds bounds how much time
  // the solution still spends below blow-up after the last threshold.
  double tail = 0.0;
  if (finest_by_threshold.size() >= 2) {
    tail = finest_by_threshold.back() - finest_by_threshold[finest_by_threshold.size() - 2];
  }
  out.extrapolated = extrapolated;
  out.t_hi = std::max(e0, extrapolated) + h + tail;
  out.t_lo = std::max(h, std::min(e0, extrapolated) - correction);
  return out;
}

BlowupEstimate estimate_blowup(FractionalOrder order, const LadderConfig& seed) {
  return estimate_blowup_from(1.0, order, seed);
}

}  // namespace fracburgers::fode
