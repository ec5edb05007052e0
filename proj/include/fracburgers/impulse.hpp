#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fracburgers/frac_ops.hpp"

namespace fracburgers::impulse {

/// Impulse times 0 < p_1 < ... < p_N.
class ImpulseTrain {
 public:
  explicit ImpulseTrain(std::vector<double> times);

  const std::vector<double>& times() const noexcept { return times_; }
  std::size_t size() const noexcept { return times_.size(); }

 private:
  std::vector<double> times_;
};

/// #{k : p_k < t}: the alpha = 1 solution of the impulsively forced problem.
int step_solution(const ImpulseTrain& train, double t);

/// (1/Gamma(alpha)) sum_{p_k < t} (t - p_k)^{alpha - 1}, for alpha in (0, 1).
/// Throws std::domain_error when t coincides with an impulse time.
double fractional_impulse_solution(const ImpulseTrain& train, FractionalOrder order, double t);

/// Column-per-order table of impulse solutions over a time grid.
struct ImpulseTable {
  Eigen::VectorXd times;
  std::vector<double> alphas;
  std::vector<std::string> labels;
  Eigen::MatrixXd values;  // rows = times, cols = alphas
};

/// Default orders: 1/10, 1/4, 1/2, 3/4, 7/8, 9/10, 99/100, 1.
std::vector<double> default_alphas();
ImpulseTrain default_train();

/// Evaluates every order on the grid nodes; alpha = 1 columns hold step counts.
/// If any node falls on an impulse time the whole grid is shifted by half a step.
ImpulseTable impulse_dataset(const ImpulseTrain& train, const std::vector<double>& alphas,
                             const TimeGrid& grid);

}  // namespace fracburgers::impulse
