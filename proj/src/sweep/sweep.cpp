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

#include "qvc/sweep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qvc/error.hpp"
#include "qvc/random.hpp"

namespace qvc::sweep {

using circuit::AnsatzKind;
using circuit::EntanglementKind;

std::vector<EntanglementKind> SweepGrid::default_entanglements() {
  return {circuit::kAllEntanglements.begin(), circuit::kAllEntanglements.end()};
}

std::vector<AnsatzKind> SweepGrid::default_ansatze() {
  return {AnsatzKind::RealAmplitudes, AnsatzKind::ExcitationPreservingIswap, AnsatzKind::ExcitationPreservingFsim,
          AnsatzKind::PauliTwoDesign, AnsatzKind::EfficientSU2};
}

namespace {

template <typename T>
void require_unique_nonempty(const std::vector<T>& values, const char* axis) {
  if (values.empty()) throw ConfigError(std::string("sweep axis ") + axis + " is empty");
  std::set<T> seen(values.begin(), values.end());
  if (seen.size() != values.size()) throw ConfigError(std::string("sweep axis ") + axis + " has duplicates");
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

void SweepGrid::validate() const {
  require_unique_nonempty(num_feat, "num_feat");
  require_unique_nonempty(num_rep, "num_rep");
  require_unique_nonempty(entanglements, "entangle");
  require_unique_nonempty(ansatze, "ansatz");
  for (int k : num_feat) {
    if (k < 2 || k > 24) throw ConfigError("num_feat values must be in 2..24");
  }
  for (int r : num_rep) {
    if (r < 1) throw ConfigError("num_rep values must be >= 1");
  }
  if (runs_per_config < 1) throw ConfigError("runs must be >= 1");
}

std::vector<CircuitType> enumerate_circuit_types(const SweepGrid& grid) {
  std::vector<CircuitType> types;
  const bool has_pw = std::find(grid.entanglements.begin(), grid.entanglements.end(), EntanglementKind::Pairwise) !=
                      grid.entanglements.end();
  for (AnsatzKind a : grid.ansatze) {
    if (a == AnsatzKind::EfficientSU2) {
      if (has_pw) types.push_back({a, EntanglementKind::Pairwise});
      continue;
    }
    for (EntanglementKind e : grid.entanglements) types.push_back({a, e});
  }
  return types;
}

std::vector<ModelConfig> enumerate_configs(const SweepGrid& grid) {
  std::vector<ModelConfig> configs;
  const auto types = enumerate_circuit_types(grid);
  for (int k : grid.num_feat) {
    for (int r : grid.num_rep) {
      for (const auto& t : types) configs.push_back({k, r, t.entangle, t.ansatz});
    }
  }
  return configs;
}

std::uint64_t record_seed(std::uint64_t base_seed, const ModelConfig& c, int run) {
  std::uint64_t h = mix64(base_seed);
  h = mix64(h ^ static_cast<std::uint64_t>(c.num_feat));
  h = mix64(h ^ static_cast<std::uint64_t>(c.num_rep));
  h = mix64(h ^ fnv1a(circuit::code(c.entangle)));
  h = mix64(h ^ fnv1a(circuit::code(c.ansatz)));
  return mix64(h ^ static_cast<std::uint64_t>(run));
}

std::optional<Profile> find_profile(std::string_view name) {
  if (name == "desk") return Profile{"desk", 200, 100, 3, 150};
  if (name == "paper") return Profile{"paper", 1000, 500, 10, 400};
  return std::nullopt;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QVC_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("QVC_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Task {
  ModelConfig config;
  int run = 0;
  std::uint64_t seed = 0;
};

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads complete records from an interrupted run and truncates any partial
// trailing line so appends start on a fresh line.
std::vector<RunRecord> recover_existing(const std::filesystem::path& path) {
  std::string text = read_text(path);
  const auto last_nl = text.rfind('\n');
  const std::size_t complete = last_nl == std::string::npos ? 0 : last_nl + 1;
  if (complete != text.size()) {
    std::filesystem::resize_file(path, complete);
    text.resize(complete);
  }
  if (text.empty()) {
    std::ofstream(path, std::ios::binary | std::ios::trunc) << kResultsHeader << '\n';
    return {};
  }
  return parse_results(text, path.string());
}

RunRecord train_one(const Task& task, const data::Dataset& train, const data::Dataset& test,
                    const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  model::TrainConfig cfg;
  cfg.spec = {task.config.ansatz, task.config.entangle, task.config.num_rep, task.config.num_feat, task.seed,
              options.decoding};
  cfg.optimizer = options.optimizer;
  cfg.optimizer.seed = mix64(task.seed ^ 0x7468657461ULL);
  cfg.optimizer.trace_path.reset();
  cfg.encoding = options.encoding;
  const auto result = model::train_model(train, cfg);
  if (result.optimization.reason == opt::StopReason::NonFinite) {
    throw std::runtime_error(result.optimization.diagnostic);
  }
  RunRecord r;
  r.config = task.config;
  r.run = task.run;
  r.seed = task.seed;
  r.train_accuracy = result.train_accuracy;
  r.test_accuracy = model::accuracy(result.model, test);
  r.final_loss = result.final_loss;
  r.evals = result.optimization.evaluations_used;
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string describe(const ModelConfig& c, int run) {
  return "num_feat=" + std::to_string(c.num_feat) + " num_rep=" + std::to_string(c.num_rep) +
         " entangle=" + std::string(circuit::code(c.entangle)) + " ansatz=" + std::string(circuit::code(c.ansatz)) +
         " run=" + std::to_string(run);
}

}  // namespace

SweepSummary run_sweep(const SweepGrid& grid, const data::Dataset& train, const data::Dataset& test,
                       const SweepOptions& options) {
  grid.validate();
  options.optimizer.validate();
  if (train.feature_names != test.feature_names) {
    throw ConfigError("train and test datasets have different feature columns");
  }

  const auto configs = enumerate_configs(grid);
  const auto runs = static_cast<std::size_t>(grid.runs_per_config);
  std::vector<Task> tasks;
  tasks.reserve(configs.size() * runs);
  for (const auto& c : configs) {
    for (int r = 0; r < grid.runs_per_config; ++r) tasks.push_back({c, r, record_seed(grid.base_seed, c, r)});
  }
  auto task_index = [&](const ModelConfig& c, int run) -> std::optional<std::size_t> {
    const auto it = std::find(configs.begin(), configs.end(), c);
    if (it == configs.end() || run < 0 || static_cast<std::size_t>(run) >= runs) return std::nullopt;
    return static_cast<std::size_t>(it - configs.begin()) * runs + static_cast<std::size_t>(run);
  };

  std::vector<std::optional<RunRecord>> slots(tasks.size());
  SweepSummary summary;
  if (options.out_path && std::filesystem::exists(*options.out_path)) {
    for (const auto& rec : recover_existing(*options.out_path)) {
      const auto idx = task_index(rec.config, rec.run);
      if (!idx) {
        throw ConfigError(options.out_path->string() + " holds a record outside this grid (" +
                          describe(rec.config, rec.run) + ")");
      }
      if (rec.seed != tasks[*idx].seed) {
        throw ConfigError(options.out_path->string() + " was produced with a different base seed");
      }
      if (!slots[*idx]) {
        slots[*idx] = rec;
        ++summary.resumed;
      }
    }
  } else if (options.out_path) {
    std::ofstream out(*options.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + options.out_path->string());
    out << kResultsHeader << '\n';
  }

  // Shared column selection per feature count.
  const auto order = train.importance_order ? *train.importance_order : data::rank_features(train);
  std::map<int, std::pair<data::Dataset, data::Dataset>> views;
  for (int k : grid.num_feat) {
    if (static_cast<std::size_t>(k) > order.size()) {
      throw ConfigError("num_feat " + std::to_string(k) + " exceeds the " + std::to_string(order.size()) +
                        " ranked features");
    }
    const std::vector<std::string> cols(order.begin(), order.begin() + k);
    views.emplace(k, std::make_pair(data::select_features(train, cols), data::select_features(test, cols)));
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!slots[i]) pending.push_back(i);
  }

  std::ofstream appender;
  if (options.out_path && !pending.empty()) {
    appender.open(*options.out_path, std::ios::binary | std::ios::app);
    if (!appender) throw std::runtime_error("cannot append to " + options.out_path->string());
  }
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::size_t done = summary.resumed;
  const std::size_t total = tasks.size();

  auto worker = [&] {
    while (true) {
      const std::size_t p = next.fetch_add(1);
      if (p >= pending.size()) return;
      const Task& task = tasks[pending[p]];
      const auto& view = views.at(task.config.num_feat);
      try {
        RunRecord rec = train_one(task, view.first, view.second, options);
        std::lock_guard lock(mu);
        if (appender.is_open()) {
          appender << format_record(rec) << '\n';
          appender.flush();
          if (!appender) throw std::runtime_error("write failed for " + options.out_path->string());
        }
        slots[pending[p]] = rec;
        ++done;
        if (options.on_record) options.on_record(rec, done, total);
      } catch (const std::exception& e) {
        std::lock_guard lock(mu);
        const std::string msg = describe(task.config, task.run) + ": " + e.what();
        summary.failures.push_back(msg);
        std::cerr << "record failed: " << msg << '\n';
      }
    }
  };

  const int threads = std::min<int>(resolve_threads(options.threads), static_cast<int>(std::max<std::size_t>(pending.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (appender.is_open()) appender.close();

  for (auto& s : slots) {
    if (s) summary.records.push_back(std::move(*s));
  }
  if (options.out_path) {
    auto tmp = *options.out_path;
    tmp += ".tmp";
    write_results(summary.records, tmp);
    std::filesystem::rename(tmp, *options.out_path);
  }
  return summary;
}

}  // namespace qvc::sweep
