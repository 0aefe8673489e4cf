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
#include <string>
#include <string_view>
#include <vector>

#include "qvc/circuit/builders.hpp"

namespace qvc::sweep {

/// One point of the hyperparameter grid.
struct ModelConfig {
  int num_feat = 4;
  int num_rep = 1;
  circuit::EntanglementKind entangle = circuit::EntanglementKind::Full;
  circuit::AnsatzKind ansatz = circuit::AnsatzKind::RealAmplitudes;
  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Outcome of training one model configuration once.
struct RunRecord {
  ModelConfig config;
  int run = 0;
  std::uint64_t seed = 0;
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  double final_loss = 0.0;
  int evals = 0;
  std::int64_t wall_ms = 0;
};

inline constexpr std::string_view kResultsHeader =
    "num_feat,num_rep,entangle,ansatz,run,seed,train_accuracy,test_accuracy,final_loss,evals,wall_ms";

/// One CSV line without the trailing newline. Reals use shortest
/// round-trip formatting.
std::string format_record(const RunRecord& record);
/// Parses a line produced by format_record. Throws LoadError.
RunRecord parse_record(std::string_view line);

/// Reads a results CSV. Throws LoadError on a bad header or malformed line
/// (naming the line number).
std::vector<RunRecord> read_results(const std::filesystem::path& path);
std::vector<RunRecord> parse_results(std::string_view text, const std::string& source_name = "<memory>");
void write_results(const std::vector<RunRecord>& records, const std::filesystem::path& path);

}  // namespace qvc::sweep
