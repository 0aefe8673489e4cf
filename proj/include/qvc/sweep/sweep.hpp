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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qvc/data/dataset.hpp"
#include "qvc/model/training.hpp"
#include "qvc/opt/cobyla.hpp"
#include "qvc/sweep/records.hpp"

namespace qvc::sweep {

struct SweepGrid {
  std::vector<int> num_feat{4, 5, 6, 7, 8};
  std::vector<int> num_rep{1, 3, 5, 7};
  std::vector<circuit::EntanglementKind> entanglements{default_entanglements()};
  std::vector<circuit::AnsatzKind> ansatze{default_ansatze()};
  int runs_per_config = 10;
  std::uint64_t base_seed = 0;

  static std::vector<circuit::EntanglementKind> default_entanglements();
  /// ra, ep_is, ep_fs, ptd, es.
  static std::vector<circuit::AnsatzKind> default_ansatze();

  /// Throws ConfigError on empty axes, duplicates, or out-of-range values.
  void validate() const;
};

struct CircuitType {
  circuit::AnsatzKind ansatz;
  circuit::EntanglementKind entangle;
  friend bool operator==(const CircuitType&, const CircuitType&) = default;
};

/// Every ansatz except es crosses every selected entanglement label (ptd
/// builds its pairwise layout whatever the label); es appears once, with
/// pw, when pw is selected.
std::vector<CircuitType> enumerate_circuit_types(const SweepGrid& grid);

/// Grid points in canonical order: num_feat, then num_rep, then circuit type.
std::vector<ModelConfig> enumerate_configs(const SweepGrid& grid);

/// Stable per-record seed; independent of execution order.
std::uint64_t record_seed(std::uint64_t base_seed, const ModelConfig& config, int run);

/// Named dataset/run-size presets.
struct Profile {
  std::string name;
  int train_size = 0;
  int test_size = 0;
  int runs = 0;
  int max_iterations = 0;
};

/// desk: 200/100 samples, 3 runs, 150 evaluations. paper: 1000/500, 10, 400.
std::optional<Profile> find_profile(std::string_view name);

struct SweepOptions {
  opt::OptimizerConfig optimizer;
  model::EncodingRange encoding;
  model::Decoding decoding = model::Decoding::Mean;
  /// Worker threads; 0 means QVC_THREADS or the hardware concurrency.
  int threads = 0;
  /// Results CSV. Existing complete records are reused; new ones are
  /// appended as they finish; the file is rewritten in canonical order at
  /// the end.
  std::optional<std::filesystem::path> out_path;
  /// Called (serialized) after each record is appended.
  std::function<void(const RunRecord&, std::size_t done, std::size_t total)> on_record;
};

struct SweepSummary {
  std::vector<RunRecord> records;  // canonical order
  std::size_t resumed = 0;         // records taken from an existing file
  std::vector<std::string> failures;
};

/// Trains every (config, run) of `grid`. Top-k selection uses the training
/// set's importance order (ranked when absent) for both splits.
SweepSummary run_sweep(const SweepGrid& grid, const data::Dataset& train, const data::Dataset& test,
                       const SweepOptions& options);

/// Resolves the worker count: explicit value, else QVC_THREADS, else the
/// hardware concurrency (at least 1).
int resolve_threads(int requested);

}  // namespace qvc::sweep
