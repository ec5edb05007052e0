#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fracburgers/impulse.hpp"
#include "oracles.hpp"

using namespace fracburgers;
using namespace fracburgers::impulse;

TEST_CASE("impulse train validation") {
  CHECK_NOTHROW(ImpulseTrain({1.0, 2.0}));
  CHECK_THROWS_AS(ImpulseTrain({}), std::invalid_argument);
  CHECK_THROWS_AS(ImpulseTrain({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ImpulseTrain({2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ImpulseTrain({1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("step solution counts impulses strictly before t") {
  const auto train = default_train();
  CHECK(step_solution(train, 2.5) == 2);
  CHECK(step_solution(train, 0.0) == 0);
  CHECK(step_solution(train, 1.0) == 0);
  CHECK(step_solution(train, 1.0 + 1e-12) == 1);
  CHECK(step_solution(train, 100.0) == 4);
}

TEST_CASE("fractional impulse solution values") {
  const ImpulseTrain single({1.0});
  CHECK(fractional_impulse_solution(single, FractionalOrder(0.5), 0.5) == 0.0);
  CHECK(oracles::relative_error(fractional_impulse_solution(single, FractionalOrder(0.5), 2.0),
                                0.56418958354775628695) <= 1e-14);
  const auto train = default_train();
  const double v = fractional_impulse_solution(train, FractionalOrder(0.99), 2.5);
  CHECK(oracles::relative_error(v, 1.9912167239049315997) <= 1e-13);
  CHECK(std::abs(v - 2.0) <= 0.1);
  CHECK(oracles::relative_error(fractional_impulse_solution(train, FractionalOrder(0.99), 4.5),
                                3.9580967033026538404) <= 1e-13);

  CHECK_THROWS_AS(fractional_impulse_solution(train, FractionalOrder(0.5), 3.0), std::domain_error);
  CHECK_THROWS_AS(fractional_impulse_solution(train, FractionalOrder(1.0), 3.5), std::invalid_argument);
}

TEST_CASE("superposition of single impulses") {
  const ImpulseTrain train({0.3, 1.1, 1.7, 2.9, 4.0});
  for (double a : {0.2, 0.5, 0.8}) {
    const FractionalOrder order(a);
    for (double t : {0.1, 0.9, 1.5, 2.0, 3.3, 7.0}) {
      double sum = 0.0;
      for (double p : train.times()) sum += fractional_impulse_solution(ImpulseTrain({p}), order, t);
      CHECK(oracles::relative_error(fractional_impulse_solution(train, order, t), sum) <= 1e-14);
    }
  }
}

TEST_CASE("solutions diverge to the right of each impulse") {
  const auto train = default_train();
  for (double a : {0.1, 0.25, 0.5}) {
    for (double p : train.times()) {
      CHECK(fractional_impulse_solution(train, FractionalOrder(a), p + 1e-8) > 1e3);
    }
  }
}

TEST_CASE("alpha -> 1 recovers the step count") {
  const auto train = default_train();
  for (double t : {0.5, 1.5, 2.2, 3.9, 4.5, 6.0}) {
    double previous = INFINITY;
    for (double a : {0.9, 0.99, 0.999}) {
      const double gap = std::abs(fractional_impulse_solution(train, FractionalOrder(a), t) - step_solution(train, t));
      CHECK(gap <= previous);
      previous = gap;
    }
  }
}

TEST_CASE("impulse dataset") {
  const auto train = default_train();
  const auto alphas = default_alphas();
  REQUIRE(alphas.size() == 8);
  CHECK(alphas.back() == 1.0);
  const auto table = impulse_dataset(train, alphas, TimeGrid::covering(0.01, 50.0));
  CHECK(table.values.cols() == 8);
  CHECK(table.labels.size() == 8);
  CHECK(table.labels[2] == "alpha=0.5");
  CHECK(table.values.rows() == table.times.size());

  // The 0.01 grid lands on every integer, so it is shifted by half a step.
  CHECK(table.times(0) == doctest::Approx(0.005));
  for (Eigen::Index i = 0; i < table.times.size(); ++i) {
    const double t = table.times(i);
    CHECK(table.values(i, 7) == step_solution(train, t));
    if (i > 0) CHECK(table.values(i, 7) >= table.values(i - 1, 7));
    if (t > 4.0) CHECK(table.values(i, 7) == 4.0);
  }

  auto row_at = [&](double t) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 0; i < table.times.size(); ++i) {
      if (std::abs(table.times(i) - t) < std::abs(table.times(best) - t)) best = i;
    }
    return best;
  };
  const auto late = row_at(50.0);
  const auto mid = row_at(4.5);
  for (Eigen::Index c = 0; c < 7; ++c) CHECK(table.values(late, c) < table.values(mid, c));

  const ImpulseTable unshifted = impulse_dataset(train, {0.5}, TimeGrid(0.35, 10));
  CHECK(unshifted.times(0) == 0.0);
}
