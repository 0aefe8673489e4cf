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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "qvc/circuit/builders.hpp"
#include "qvc/data/dataset.hpp"
#include "qvc/error.hpp"
#include "qvc/model/qnn.hpp"
#include "qvc/model/training.hpp"
#include "qvc/stats/anova.hpp"
#include "qvc/sweep/sweep.hpp"

namespace qvc::cli {

namespace fs = std::filesystem;
using circuit::AnsatzKind;
using circuit::EntanglementKind;

namespace {

std::string real(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

std::string sci(double v) {
  std::ostringstream ss;
  ss << std::setprecision(4) << v;
  return ss.str();
}

AnsatzKind ansatz_flag(const std::string& text) {
  if (auto a = circuit::parse_ansatz(text)) return *a;
  throw UsageError("unknown ansatz '" + text + "' (expected ra, ptd, es, ep_is, ep_fs)");
}

EntanglementKind entangle_flag(const std::string& text) {
  if (auto e = circuit::parse_entanglement(text)) return *e;
  throw UsageError("unknown entanglement '" + text + "' (expected fl, ln, rl, pw, cl, sca)");
}

void warn_ptd_layout(AnsatzKind a, EntanglementKind e, std::ostream& err) {
  if (a == AnsatzKind::PauliTwoDesign && e != EntanglementKind::Pairwise) {
    err << "warning: ptd always uses the pw layout; entanglement '" << circuit::code(e)
        << "' is kept only as a label\n";
  }
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_[0].size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) os << "  ";
        if (j == 0) {
          os << std::left << std::setw(static_cast<int>(width[j])) << rows_[i][j];
        } else {
          os << std::right << std::setw(static_cast<int>(width[j])) << rows_[i][j];
        }
      }
      os << '\n';
      if (i == 0) {
        std::size_t total = 0;
        for (auto w : width) total += w;
        os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
      }
    }
  }

  void write_csv(const fs::path& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    for (const auto& r : rows_) {
      for (std::size_t j = 0; j < r.size(); ++j) f << (j ? "," : "") << r[j];
      f << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// ---------------------------------------------------------------- gen-data

struct GenDataArgs {
  int train_size = 1000;
  int test_size = 500;
  int features = 16;
  double separation = 3.0;
  double informative = 0.5;
  std::uint64_t seed = 0;
  std::string out = ".";
};

int cmd_gen_data(const GenDataArgs& a, std::ostream& out) {
  if (a.train_size < 2) throw UsageError("--train-size must be >= 2");
  if (a.test_size < 1) throw UsageError("--test-size must be >= 1");
  if (a.features < 2) throw UsageError("--features must be >= 2");
  if (!(a.separation >= 0.0)) throw UsageError("--separation must be >= 0");
  if (!(a.informative > 0.0 && a.informative <= 1.0)) throw UsageError("--informative must be in (0, 1]");

  data::SyntheticOptions opts;
  opts.informative_fraction = a.informative;
  const auto all = data::generate_synthetic(a.train_size + a.test_size, a.features, a.separation, a.seed, opts);
  auto [train, test] = data::split_rows(all, static_cast<std::size_t>(a.train_size));

  const fs::path dir(a.out);
  fs::create_directories(dir);
  data::write_csv(train, dir / "train.csv");
  data::write_csv(test, dir / "test.csv");
  data::write_importance(*all.importance_order, dir / "importance.txt");
  out << "wrote " << (dir / "train.csv").string() << " (" << train.num_rows() << " rows), "
      << (dir / "test.csv").string() << " (" << test.num_rows() << " rows), "
      << (dir / "importance.txt").string() << " (" << a.features << " features)\n";
  return kExitOk;
}

// ------------------------------------------------------------------- train

struct OptimizerArgs {
  int maxiter = 400;
  double rho_begin = 1.0;
  double rho_end = 1e-4;
};

struct TrainArgs {
  std::string train;
  std::string test;
  std::string importance;
  int num_feat = 4;
  int reps = 3;
  std::string ansatz = "ra";
  std::string entangle = "fl";
  std::string decoding = "mean";
  std::uint64_t seed = 0;
  std::string out = "model.json";
  std::string trace;
  OptimizerArgs opt;
};

data::Dataset load_with_importance(const std::string& path, const std::string& importance) {
  auto ds = data::load_csv(path);
  if (!importance.empty()) data::set_importance(ds, data::read_importance(importance));
  return ds;
}

int cmd_train(const TrainArgs& a, std::ostream& out, std::ostream& err) {
  model::TrainConfig cfg;
  cfg.spec.ansatz = ansatz_flag(a.ansatz);
  cfg.spec.entangle = entangle_flag(a.entangle);
  cfg.spec.num_rep = a.reps;
  cfg.spec.num_qubits = a.num_feat;
  cfg.spec.rng_seed = a.seed;
  const auto dec = model::parse_decoding(a.decoding);
  if (!dec) throw UsageError("unknown decoding '" + a.decoding + "' (expected mean, parity, q0)");
  cfg.spec.decoding = *dec;
  cfg.optimizer.max_iterations = a.opt.maxiter;
  cfg.optimizer.rho_begin = a.opt.rho_begin;
  cfg.optimizer.rho_end = a.opt.rho_end;
  cfg.optimizer.seed = a.seed;
  if (!a.trace.empty()) cfg.optimizer.trace_path = a.trace;
  cfg.optimizer.validate();
  // Pairing problems surface here, before any data is touched.
  circuit::build_ansatz(cfg.spec.ansatz, cfg.spec.num_qubits, cfg.spec.num_rep, cfg.spec.layout(), a.seed);
  warn_ptd_layout(cfg.spec.ansatz, cfg.spec.entangle, err);

  const auto full = load_with_importance(a.train, a.importance);
  if (static_cast<std::size_t>(a.num_feat) > full.num_features()) {
    throw ConfigError("--num-feat " + std::to_string(a.num_feat) + " exceeds the " +
                      std::to_string(full.num_features()) + " available features");
  }
  const auto train = data::select_top_k(full, a.num_feat);
  const auto result = model::train_model(train, cfg);
  model::save_model(result.model, a.out);

  out << "final_loss=" << real(result.final_loss) << " train_accuracy=" << real(result.train_accuracy)
      << " evals=" << result.optimization.evaluations_used
      << " stop=" << opt::to_string(result.optimization.reason) << '\n';
  if (!a.test.empty()) {
    const auto test = data::select_features(data::load_csv(a.test), train.feature_names);
    out << "test_accuracy=" << real(model::accuracy(result.model, test)) << '\n';
  }
  out << "model written to " << a.out << '\n';
  if (!result.optimization.diagnostic.empty()) err << "optimizer: " << result.optimization.diagnostic << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------- eval

struct EvalArgs {
  std::string model;
  std::string data;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const auto m = model::load_model(a.model);
  const auto ds = data::load_csv(a.data);
  const std::set<std::string> have(ds.feature_names.begin(), ds.feature_names.end());
  std::vector<std::string> missing;
  for (const auto& n : m.feature_names()) {
    if (!have.count(n)) missing.push_back(n);
  }
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "dataset " << a.data << " is incompatible with model " << a.model << ":\n  missing:";
    for (const auto& n : missing) msg << ' ' << n;
    msg << "\n  model expects:";
    for (const auto& n : m.feature_names()) msg << ' ' << n;
    msg << "\n  dataset has:";
    for (const auto& n : ds.feature_names) msg << ' ' << n;
    throw LoadError(msg.str());
  }
  const auto view = data::select_features(ds, m.feature_names());

  // confusion[actual][predicted], index 0 = invalid, 1 = valid
  std::size_t confusion[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < view.num_rows(); ++i) {
    const auto p = m.forward(view.row(i));
    ++confusion[static_cast<int>(view.labels[i])][static_cast<int>(p.label)];
  }
  out << "accuracy=" << real(model::accuracy(m, view)) << " rows=" << view.num_rows() << '\n';
  Table t({"actual\\predicted", "invalid", "valid"});
  t.add({"invalid", std::to_string(confusion[0][0]), std::to_string(confusion[0][1])});
  t.add({"valid", std::to_string(confusion[1][0]), std::to_string(confusion[1][1])});
  t.print(out);
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  std::string profile = "desk";
  std::string train;
  std::string test;
  std::string importance;
  std::vector<int> num_feat;
  std::vector<int> reps;
  std::vector<std::string> entangle;
  std::vector<std::string> ansatz;
  std::optional<int> runs;
  std::optional<int> maxiter;
  std::optional<int> train_size;
  std::optional<int> test_size;
  int features = 16;
  double separation = 3.0;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string decoding = "mean";
  std::string out = "results.csv";
  bool verbose = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const auto profile = sweep::find_profile(a.profile);
  if (!profile) throw UsageError("unknown profile '" + a.profile + "' (expected desk, paper)");
  if (a.train.empty() != a.test.empty()) throw UsageError("--train and --test must be given together");

  sweep::SweepGrid grid;
  if (!a.num_feat.empty()) grid.num_feat = a.num_feat;
  if (!a.reps.empty()) grid.num_rep = a.reps;
  if (!a.entangle.empty()) {
    grid.entanglements.clear();
    for (const auto& e : a.entangle) grid.entanglements.push_back(entangle_flag(e));
  }
  if (!a.ansatz.empty()) {
    grid.ansatze.clear();
    for (const auto& x : a.ansatz) grid.ansatze.push_back(ansatz_flag(x));
  }
  grid.runs_per_config = a.runs.value_or(profile->runs);
  grid.base_seed = a.seed;
  grid.validate();

  sweep::SweepOptions opts;
  opts.optimizer.max_iterations = a.maxiter.value_or(profile->max_iterations);
  opts.optimizer.validate();
  const auto dec = model::parse_decoding(a.decoding);
  if (!dec) throw UsageError("unknown decoding '" + a.decoding + "' (expected mean, parity, q0)");
  opts.decoding = *dec;
  opts.threads = sweep::resolve_threads(a.threads);
  opts.out_path = a.out;
  if (a.verbose) {
    opts.on_record = [&err](const sweep::RunRecord& r, std::size_t done, std::size_t total) {
      err << '[' << done << '/' << total << "] " << sweep::format_record(r) << '\n';
    };
  }

  data::Dataset train, test;
  if (!a.train.empty()) {
    train = load_with_importance(a.train, a.importance);
    test = data::load_csv(a.test);
  } else {
    const int m_train = a.train_size.value_or(profile->train_size);
    const int m_test = a.test_size.value_or(profile->test_size);
    if (m_train < 2 || m_test < 1) throw UsageError("--train-size must be >= 2 and --test-size >= 1");
    const auto all = data::generate_synthetic(m_train + m_test, a.features, a.separation, a.seed);
    std::tie(train, test) = data::split_rows(all, static_cast<std::size_t>(m_train));
  }
  if (test.feature_names != train.feature_names) {
    throw LoadError("train and test CSVs have different feature columns");
  }

  const auto configs = sweep::enumerate_configs(grid);
  err << "sweep: " << sweep::enumerate_circuit_types(grid).size() << " circuit types, " << configs.size()
      << " configs, " << configs.size() * static_cast<std::size_t>(grid.runs_per_config) << " records, "
      << opts.threads << " thread(s)\n";
  const auto summary = sweep::run_sweep(grid, train, test, opts);
  out << "records=" << summary.records.size() << " resumed=" << summary.resumed
      << " failed=" << summary.failures.size() << " results=" << a.out << '\n';
  return summary.failures.empty() ? kExitOk : kExitRuntime;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string results;
  std::string out;
  std::string box_stats;
  int top = 10;
};

std::vector<std::string> key_header(const std::vector<stats::Hyperparameter>& keys) {
  std::vector<std::string> h;
  for (auto k : keys) h.emplace_back(stats::name(k));
  h.emplace_back("avg_accuracy");
  h.emplace_back("n");
  return h;
}

Table ranking_table(const std::vector<stats::SummaryRow>& rows, const std::vector<stats::Hyperparameter>& keys,
                    std::size_t limit) {
  Table t(key_header(keys));
  for (std::size_t i = 0; i < rows.size() && i < limit; ++i) {
    std::vector<std::string> r;
    for (const auto& v : rows[i].key) r.push_back(stats::to_string(v));
    r.push_back(fixed(rows[i].avg_accuracy, 4));
    r.push_back(std::to_string(rows[i].n_records));
    t.add(std::move(r));
  }
  return t;
}

std::string join_names(const std::vector<stats::Hyperparameter>& keys) {
  std::string s;
  for (auto k : keys) s += (s.empty() ? "" : "_") + std::string(stats::name(k));
  return s;
}

// The k leading hyperparameters: significant ones first by F, then the
// rest by F when fewer than k are significant.
std::vector<stats::Hyperparameter> leading(const std::vector<stats::AnovaResult>& anova, std::size_t k,
                                           bool& padded) {
  std::vector<stats::Hyperparameter> out;
  for (const auto& r : anova) {
    if (r.significant() && out.size() < k) out.push_back(r.hyperparameter);
  }
  padded = out.size() < k;
  for (const auto& r : anova) {
    if (!r.significant() && out.size() < k) out.push_back(r.hyperparameter);
  }
  return out;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.top < 0) throw UsageError("--top must be >= 0");
  if (!fs::exists(a.results)) throw LoadError("results file not found: " + a.results);
  if (fs::file_size(a.results) == 0) throw UsageError(a.results + " is empty");
  const auto records = sweep::read_results(a.results);
  if (records.empty()) throw UsageError(a.results + " contains no records");

  std::optional<fs::path> dir;
  if (!a.out.empty()) {
    dir = a.out;
    fs::create_directories(*dir);
  }
  std::vector<std::string> warnings;
  const auto anova = stats::anova_per_hyperparameter(records, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  out << "records: " << records.size() << "\n\n== ANOVA (one-way, test accuracy per run) ==\n";
  Table at({"hyperparameter", "F", "p", "groups", "n", "significant"});
  Table ac({"hyperparameter", "F", "p", "groups", "n"});
  for (const auto& r : anova) {
    at.add({std::string(stats::name(r.hyperparameter)), fixed(r.f_statistic, 3), sci(r.p_value),
            std::to_string(r.group_count), std::to_string(r.total_observations), r.significant() ? "yes" : "no"});
    ac.add({std::string(stats::name(r.hyperparameter)), real(r.f_statistic), real(r.p_value),
            std::to_string(r.group_count), std::to_string(r.total_observations)});
  }
  at.print(out);
  if (dir) ac.write_csv(*dir / "anova.csv");

  const std::vector<stats::Hyperparameter> all = {stats::Hyperparameter::NumFeat, stats::Hyperparameter::NumRep,
                                                  stats::Hyperparameter::Entangle, stats::Hyperparameter::Ansatz};
  auto emit = [&](const std::string& title, const std::vector<stats::Hyperparameter>& keys, std::size_t limit) {
    const auto rows = stats::rank_combinations(records, keys);
    out << "\n== " << title << " ==\n";
    ranking_table(rows, keys, limit).print(out);
    if (limit < rows.size()) out << "(" << rows.size() - limit << " more rows)\n";
    if (dir) ranking_table(rows, keys, rows.size()).write_csv(*dir / ("avgacc_" + join_names(keys) + ".csv"));
  };
  const auto unlimited = std::numeric_limits<std::size_t>::max();
  for (auto hp : all) emit("avgAcc by " + std::string(stats::name(hp)), {hp}, unlimited);

  bool padded = false;
  if (anova.size() >= 2) {
    const auto pair = leading(anova, 2, padded);
    emit(std::string("avgAcc by top-2 pair") + (padded ? " (fewer than 2 significant; ranked by F)" : ""), pair,
         unlimited);
  }
  if (anova.size() >= 3) {
    const auto triple = leading(anova, 3, padded);
    emit(std::string("avgAcc by top-3 triple") + (padded ? " (fewer than 3 significant; ranked by F)" : ""),
         triple, unlimited);
  }
  emit("ranking of full combinations", all, a.top == 0 ? unlimited : static_cast<std::size_t>(a.top));

  if (!a.box_stats.empty()) {
    std::ofstream f(a.box_stats, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.box_stats);
    f << "hyperparameter,value,n,min,q1,median,q3,max,mean\n";
    for (auto hp : all) {
      for (const auto& b : stats::box_statistics(records, hp)) {
        f << stats::name(hp) << ',' << stats::to_string(b.key) << ',' << b.n << ',' << real(b.min) << ','
          << real(b.q1) << ',' << real(b.median) << ',' << real(b.q3) << ',' << real(b.max) << ','
          << real(b.mean) << '\n';
      }
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------- circuit

struct CircuitArgs {
  std::string ansatz = "ra";
  std::string entangle = "fl";
  int qubits = 3;
  int reps = 1;
  std::uint64_t seed = 0;
  bool feature_map = false;
  std::string json_out;
};

int cmd_circuit(const CircuitArgs& a, std::ostream& out, std::ostream& err) {
  circuit::CircuitTemplate tmpl;
  if (a.feature_map) {
    tmpl = circuit::build_zz_feature_map(a.qubits);
  } else {
    const auto kind = ansatz_flag(a.ansatz);
    auto ent = entangle_flag(a.entangle);
    warn_ptd_layout(kind, ent, err);
    if (kind == AnsatzKind::PauliTwoDesign) ent = EntanglementKind::Pairwise;
    tmpl = circuit::build_ansatz(kind, a.qubits, a.reps, ent, a.seed);
  }
  const auto doc = circuit::to_json(tmpl);
  out << "qubits=" << tmpl.num_qubits << " gates=" << tmpl.gates.size() << " trainable=" << tmpl.num_trainable
      << " feature_slots=" << tmpl.num_feature_slots << "\n\n"
      << circuit::render_ascii(tmpl) << '\n';
  if (a.json_out.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    std::ofstream f(a.json_out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + a.json_out);
    f << doc.dump(2) << '\n';
  }
  return kExitOk;
}

void add_optimizer_flags(CLI::App* sub, OptimizerArgs& o) {
  sub->add_option("--maxiter", o.maxiter, "COBYLA evaluation budget")->capture_default_str();
  sub->add_option("--rho-begin", o.rho_begin, "initial trust-region radius")->capture_default_str();
  sub->add_option("--rho-end", o.rho_end, "final trust-region radius")->capture_default_str();
}

}  // namespace

std::vector<std::string> merge_config_args(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw UsageError("cannot read config file " + *path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file " + *path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file " + *path + " must hold a JSON object");

  auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  auto scalar = [&](const nlohmann::json& v, const std::string& key) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
    if (v.is_number_float()) return real(v.get<double>());
    throw UsageError("config key '" + key + "' has an unsupported value type");
  };
  for (const auto& [key, value] : doc.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (flag == "--config" || given(flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_array()) {
      if (value.empty()) continue;
      args.push_back(flag);
      for (const auto& v : value) args.push_back(scalar(v, key));
    } else {
      args.push_back(flag);
      args.push_back(scalar(value, key));
    }
  }
  return args;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qvc: variational quantum classifier toolkit"};
  app.name("qvc");
  app.require_subcommand(1);
  std::string config_path;
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  GenDataArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-data", "generate synthetic train/test CSVs and an importance file");
  gen_cmd->add_option("--train-size", gen.train_size, "training rows")->capture_default_str();
  gen_cmd->add_option("--test-size", gen.test_size, "test rows")->capture_default_str();
  gen_cmd->add_option("--features", gen.features, "feature columns")->capture_default_str();
  gen_cmd->add_option("--separation", gen.separation, "class separation in pooled sigmas")->capture_default_str();
  gen_cmd->add_option("--informative", gen.informative, "fraction of informative columns")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "output directory")->capture_default_str();

  TrainArgs tr;
  auto* train_cmd = app.add_subcommand("train", "train one classifier and save it as JSON");
  train_cmd->add_option("--train", tr.train, "training CSV")->required();
  train_cmd->add_option("--test", tr.test, "optional test CSV for a held-out accuracy");
  train_cmd->add_option("--importance", tr.importance, "feature importance file");
  train_cmd->add_option("--num-feat", tr.num_feat)->capture_default_str();
  train_cmd->add_option("--reps", tr.reps)->capture_default_str();
  train_cmd->add_option("--ansatz", tr.ansatz)->capture_default_str();
  train_cmd->add_option("--entangle", tr.entangle)->capture_default_str();
  train_cmd->add_option("--decoding", tr.decoding, "mean, parity or q0")->capture_default_str();
  train_cmd->add_option("--seed", tr.seed)->capture_default_str();
  train_cmd->add_option("--out", tr.out, "model JSON path")->capture_default_str();
  train_cmd->add_option("--trace", tr.trace, "optimizer trace CSV");
  add_optimizer_flags(train_cmd, tr.opt);

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "score a saved model on a dataset");
  eval_cmd->add_option("--model", ev.model, "model JSON")->required();
  eval_cmd->add_option("--test,--data", ev.data, "dataset CSV")->required();

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "train the hyperparameter grid and write a results CSV");
  sweep_cmd->add_option("--profile", sw.profile, "desk or paper")->capture_default_str();
  sweep_cmd->add_option("--train", sw.train, "training CSV (synthetic data when omitted)");
  sweep_cmd->add_option("--test", sw.test, "test CSV");
  sweep_cmd->add_option("--importance", sw.importance, "feature importance file");
  sweep_cmd->add_option("--num-feat", sw.num_feat)->delimiter(',');
  sweep_cmd->add_option("--reps", sw.reps)->delimiter(',');
  sweep_cmd->add_option("--entangle", sw.entangle)->delimiter(',');
  sweep_cmd->add_option("--ansatz", sw.ansatz)->delimiter(',');
  sweep_cmd->add_option("--runs", sw.runs, "runs per configuration");
  sweep_cmd->add_option("--maxiter", sw.maxiter, "COBYLA evaluation budget");
  sweep_cmd->add_option("--train-size", sw.train_size, "synthetic training rows");
  sweep_cmd->add_option("--test-size", sw.test_size, "synthetic test rows");
  sweep_cmd->add_option("--features", sw.features, "synthetic feature columns")->capture_default_str();
  sweep_cmd->add_option("--separation", sw.separation, "synthetic class separation")->capture_default_str();
  sweep_cmd->add_option("--decoding", sw.decoding, "mean, parity or q0")->capture_default_str();
  sweep_cmd->add_option("--seed", sw.seed, "base seed")->capture_default_str();
  sweep_cmd->add_option("--threads", sw.threads, "worker threads (0: QVC_THREADS or all cores)");
  sweep_cmd->add_option("--out", sw.out, "results CSV")->capture_default_str();
  sweep_cmd->add_flag("-v,--verbose", sw.verbose, "log every finished record");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "ANOVA and avgAcc rankings from a results CSV");
  analyze_cmd->add_option("--results", an.results, "results CSV")->required();
  analyze_cmd->add_option("--out", an.out, "directory for CSV copies of every table");
  analyze_cmd->add_option("--box-stats", an.box_stats, "per-group box-plot statistics CSV");
  analyze_cmd->add_option("--top", an.top, "rows of the full ranking to print (0: all)")->capture_default_str();

  CircuitArgs ci;
  auto* circuit_cmd = app.add_subcommand("circuit", "print an ansatz or the feature map");
  circuit_cmd->add_option("--ansatz", ci.ansatz)->capture_default_str();
  circuit_cmd->add_option("--entangle", ci.entangle)->capture_default_str();
  circuit_cmd->add_option("--qubits", ci.qubits)->capture_default_str();
  circuit_cmd->add_option("--reps", ci.reps)->capture_default_str();
  circuit_cmd->add_option("--seed", ci.seed, "ptd rotation draw")->capture_default_str();
  circuit_cmd->add_flag("--feature-map", ci.feature_map, "show the ZZ feature map instead");
  circuit_cmd->add_option("--json-out", ci.json_out, "write the JSON here instead of stdout");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--config", config_path, "JSON file with flag values (flags win)");
  }

  try {
    auto args = merge_config_args(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qvc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "qvc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen_data(gen, out);
    if (train_cmd->parsed()) return cmd_train(tr, out, err);
    if (eval_cmd->parsed()) return cmd_eval(ev, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sw, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(an, out, err);
    if (circuit_cmd->parsed()) return cmd_circuit(ci, out, err);
  } catch (const UsageError& e) {
    err << "qvc: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "qvc: invalid configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qvc: error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace qvc::cli
