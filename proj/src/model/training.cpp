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

#include "qvc/model/training.hpp"

#include "qvc/error.hpp"

namespace qvc::model {

TrainResult train_model(const data::Dataset& train, const TrainConfig& config) {
  if (train.num_features() != static_cast<std::size_t>(config.spec.num_qubits)) {
    throw ConfigError("training data has " + std::to_string(train.num_features()) + " features but the model has " +
                      std::to_string(config.spec.num_qubits) + " qubits");
  }
  config.optimizer.validate();
  auto scaling = data::fit_scaling(train, config.encoding.lower, config.encoding.upper);
  QnnModel model = QnnModel::build(config.spec, std::move(scaling), train.feature_names);

  const CachedObjective objective(model, train);
  const auto start = opt::initial_theta(model.num_parameters(), config.optimizer.seed);
  auto result = opt::minimize([&](std::span<const double> theta) { return objective(theta); }, start,
                              config.optimizer);
  model.set_theta(result.best_theta);

  TrainResult out{std::move(model), std::move(result), 0.0, 0.0};
  out.final_loss = out.optimization.best_value;
  out.train_accuracy = accuracy(out.model, train);
  return out;
}

}  // namespace qvc::model
