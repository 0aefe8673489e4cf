// Copyright 2026 The QVC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <span>

namespace qvc::testing {

/// f(x) = 0.5 (x - x*)^T H (x - x*), minimum 0 at x*.
struct Quadratic {
  Eigen::MatrixXd H;
  Eigen::VectorXd xstar;
  double operator()(std::span<const double> x) const {
    const Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size())) - xstar;
    return 0.5 * d.dot(H * d);
  }
};

// Eigenvalues log-uniform in [0.5, 5], random orthogonal basis, minimiser
// uniform in [-2, 2]^dim.
inline Quadratic random_quadratic(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> log_eig(std::log(0.5), std::log(5.0));
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  Eigen::MatrixXd M(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) M(i, j) = normal(rng);
  const Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(M).householderQ();
  Eigen::VectorXd eig(dim);
  for (int i = 0; i < dim; ++i) eig(i) = std::exp(log_eig(rng));
  Quadratic q{Q * eig.asDiagonal() * Q.transpose(), Eigen::VectorXd(dim)};
  for (int i = 0; i < dim; ++i) q.xstar(i) = box(rng);
  return q;
}

}  // namespace qvc::testing
