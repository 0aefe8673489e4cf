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

#include "qvc/data/dataset.hpp"
#include "qvc/model/qnn.hpp"
#include "qvc/opt/cobyla.hpp"

namespace qvc::model {

/// Interval the training-split feature range is mapped onto before
/// encoding.
struct EncodingRange {
  double lower = 0.6 * data::kPi;
  double upper = data::kPi;
};

struct TrainConfig {
  ModelSpec spec;
  opt::OptimizerConfig optimizer;
  EncodingRange encoding;
};

struct TrainResult {
  QnnModel model;
  opt::OptimizationResult optimization;
  double train_accuracy = 0.0;
  double final_loss = 0.0;
};

/// Fits scaling on `train`, draws initial theta from optimizer.seed and
/// minimises the squared-error loss. `train` must already hold exactly
/// spec.num_qubits feature columns.
TrainResult train_model(const data::Dataset& train, const TrainConfig& config);

}  // namespace qvc::model
