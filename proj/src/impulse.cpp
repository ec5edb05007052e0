#include "fracburgers/impulse.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <stdexcept>

#include "fracburgers/specfun.hpp"

namespace fracburgers::impulse {

ImpulseTrain::ImpulseTrain(std::vector<double> times) : times_(std::move(times)) {
  if (times_.empty()) throw std::invalid_argument("impulse train needs at least one time");
  for (std::size_t k = 0; k < times_.size(); ++k) {
    if (!(times_[k] > 0.0) || !std::isfinite(times_[k])) {
      throw std::invalid_argument("impulse times must be finite and positive");
    }
    if (k > 0 && !(times_[k] > times_[k - 1])) {
      throw std::invalid_argument("impulse times must be strictly increasing");
    }
  }
}

int step_solution(const ImpulseTrain& train, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("step_solution needs t >= 0");
  int count = 0;
  for (double p : train.times()) {
    if (p < t) ++count;
  }
  return count;
}

double fractional_impulse_solution(const ImpulseTrain& train, FractionalOrder order, double t) {
  if (order.is_classical()) {
    throw std::invalid_argument("fractional impulse solution needs alpha < 1; use step_solution");
  }
  if (!(t >= 0.0)) throw std::invalid_argument("fractional impulse solution needs t >= 0");
  const double a = order.value();
  double sum = 0.0;
  for (double p : train.times()) {
    if (t == p) {
      throw std::domain_error("fractional impulse solution diverges at impulse time " +
                              std::to_string(p));
    }
    if (p < t) sum += std::pow(t - p, a - 1.0);
  }
  return sum / specfun::gamma(a);
}

std::vector<double> default_alphas() {
  return {1.0 / 10.0, 1.0 / 4.0, 1.0 / 2.0, 3.0 / 4.0, 7.0 / 8.0, 9.0 / 10.0, 99.0 / 100.0, 1.0};
}

ImpulseTrain default_train() { return ImpulseTrain({1.0, 2.0, 3.0, 4.0}); }

ImpulseTable impulse_dataset(const ImpulseTrain& train, const std::vector<double>& alphas,
                             const TimeGrid& grid) {
  if (alphas.empty()) throw std::invalid_argument("impulse dataset needs at least one order");
  std::vector<FractionalOrder> orders;
  orders.reserve(alphas.size());
  for (double a : alphas) orders.emplace_back(a);

  bool hits = false;
  for (std::size_t j = 0; j < grid.size() && !hits; ++j) {
    for (double p : train.times()) {
      if (std::abs(grid.node(j) - p) <= 1e-12 * std::max(1.0, p)) hits = true;
    }
  }
  const TimeGrid used = hits ? TimeGrid(grid.step, grid.count, grid.origin + 0.5 * grid.step) : grid;

  ImpulseTable table;
  table.alphas = alphas;
  table.times.resize(static_cast<Eigen::Index>(used.size()));
  table.values.resize(static_cast<Eigen::Index>(used.size()), static_cast<Eigen::Index>(alphas.size()));
  for (double a : alphas) {
    char buf[32];
    const auto end = std::to_chars(buf, buf + sizeof buf, a).ptr;
    table.labels.push_back("alpha=" + std::string(buf, end));
  }
  for (std::size_t j = 0; j < used.size(); ++j) {
    const double t = used.node(j);
    const auto row = static_cast<Eigen::Index>(j);
    table.times(row) = t;
    for (std::size_t c = 0; c < orders.size(); ++c) {
      const auto col = static_cast<Eigen::Index>(c);
      table.values(row, col) = orders[c].is_classical()
                                   ? static_cast<double>(step_solution(train, t))
                                   : fractional_impulse_solution(train, orders[c], t);
    }
  }
  return table;
}

}  // namespace fracburgers::impulse
