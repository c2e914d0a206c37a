// Copyright 2026 The Newsrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "newsrank/models/linear_ar.h"

#include <iostream>

#include <Eigen/Dense>

#include "newsrank/error.h"

namespace newsrank {

LinearArModel::LinearArModel(int order, std::size_t static_dim,
                             std::vector<double> coefficients)
    : order_(order),
      static_dim_(static_dim),
      coefficients_(std::move(coefficients)) {
  if (order < 1) throw ConfigError("autoregressive order must be positive");
  if (coefficients_.size() != ar_input_dim(order, static_dim) + 1) {
    throw ConfigError("linear AR coefficient count does not match its inputs");
  }
}

double LinearArModel::predict_one(std::span<const double> regressors) const {
  if (regressors.size() + 1 != coefficients_.size()) {
    throw InputError("linear AR input dimension mismatch");
  }
  double y = coefficients_.back();
  for (std::size_t i = 0; i < regressors.size(); ++i) {
    y += coefficients_[i] * regressors[i];
  }
  return y;
}

Forecast LinearArModel::forecast(std::span<const double> ts,
                                 std::span<const double> statics,
                                 int target_step, bool) const {
  check_inputs(ts, statics, target_step);
  return predict_recursive(
      [this](std::span<const double> row) { return predict_one(row); }, order_,
      ts, statics, target_step);
}

void LinearArModel::write_params(std::ostream& out) const {
  out << nlohmann::json{{"static_dim", static_dim_},
                        {"coefficients", coefficients_}}
             .dump();
}

LinearArFit linear_ar_fit(const ArDataset& data, int order,
                          std::size_t static_dim) {
  const std::size_t dim = ar_input_dim(order, static_dim);
  if (data.size() == 0) throw InputError("linear AR fit needs samples");
  if (data.dim != dim) throw InputError("linear AR sample dimension mismatch");

  const auto n = static_cast<Eigen::Index>(data.size());
  const auto cols = static_cast<Eigen::Index>(dim + 1);
  Eigen::MatrixXd design(n, cols);
  Eigen::VectorXd target(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto row = data.row(static_cast<std::size_t>(i));
    for (Eigen::Index j = 0; j < cols - 1; ++j) design(i, j) = row[j];
    design(i, cols - 1) = 1.0;
    target(i) = data.y[static_cast<std::size_t>(i)];
  }

  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
  const Eigen::VectorXd solution = cod.solve(target);
  const auto rank = static_cast<std::size_t>(cod.rank());
  const bool deficient = rank < static_cast<std::size_t>(cols);
  if (deficient) {
    std::clog << "warning: linear AR design matrix has rank " << rank
              << " < " << cols << "; using the minimum-norm solution\n";
  }
  return {LinearArModel(order, static_dim,
                        std::vector<double>(solution.begin(), solution.end())),
          deficient, rank};
}

}  // namespace newsrank
