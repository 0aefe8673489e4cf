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

#include "qvc/model/qnn.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "qvc/error.hpp"

namespace qvc::model {

using circuit::CircuitTemplate;

std::string_view code(Decoding decoding) noexcept {
  switch (decoding) {
    case Decoding::Mean: return "mean";
    case Decoding::Parity: return "parity";
    case Decoding::Qubit0: return "q0";
  }
  return "?";
}

std::optional<Decoding> parse_decoding(std::string_view text) noexcept {
  if (text == "mean") return Decoding::Mean;
  if (text == "parity") return Decoding::Parity;
  if (text == "q0") return Decoding::Qubit0;
  return std::nullopt;
}

circuit::EntanglementKind ModelSpec::layout() const noexcept {
  return ansatz == circuit::AnsatzKind::PauliTwoDesign ? circuit::EntanglementKind::Pairwise : entangle;
}

QnnModel QnnModel::build(const ModelSpec& spec, data::ScalingSpec scaling, std::vector<std::string> feature_names) {
  QnnModel m(circuit::build_zz_feature_map(spec.num_qubits),
             circuit::build_ansatz(spec.ansatz, spec.num_qubits, spec.num_rep, spec.layout(), spec.rng_seed),
             std::move(scaling), std::move(feature_names), spec.decoding);
  m.spec_ = spec;
  return m;
}

QnnModel::QnnModel(CircuitTemplate feature_map, CircuitTemplate ansatz, data::ScalingSpec scaling,
                   std::vector<std::string> feature_names, Decoding decoding)
    : feature_map_(std::move(feature_map)),
      ansatz_(std::move(ansatz)),
      scaling_(std::move(scaling)),
      feature_names_(std::move(feature_names)),
      theta_(static_cast<std::size_t>(ansatz_.num_trainable), 0.0),
      decoding_(decoding) {
  check_invariants();
}

void QnnModel::check_invariants() const {
  const int n = ansatz_.num_qubits;
  if (feature_map_.num_qubits != n) throw ConfigError("feature map and ansatz qubit counts differ");
  if (feature_map_.num_feature_slots != n) throw ConfigError("feature map must take one feature per qubit");
  if (feature_map_.num_trainable != 0) throw ConfigError("feature map must not carry trainable slots");
  if (ansatz_.num_feature_slots != 0) throw ConfigError("ansatz must not reference feature slots");
  if (scaling_.min.size() != static_cast<std::size_t>(n) || scaling_.max.size() != static_cast<std::size_t>(n)) {
    throw ConfigError("scaling must cover one feature per qubit");
  }
  if (!feature_names_.empty() && feature_names_.size() != static_cast<std::size_t>(n)) {
    throw ConfigError("feature name count differs from qubit count");
  }
  if (theta_.size() != static_cast<std::size_t>(ansatz_.num_trainable)) throw ConfigError("theta length mismatch");
}

void QnnModel::set_theta(std::vector<double> theta) {
  if (theta.size() != theta_.size()) {
    throw UsageError("theta needs " + std::to_string(theta_.size()) + " values, got " + std::to_string(theta.size()));
  }
  theta_ = std::move(theta);
}

sim::QuantumState QnnModel::encode(std::span<const double> scaled) const {
  sim::QuantumState state(num_qubits());
  state.apply(circuit::bind(feature_map_, scaled, {}));
  return state;
}

Prediction QnnModel::readout(sim::QuantumState state, std::span<const sim::GateInstance> ansatz_gates) const {
  state.apply(ansatz_gates);
  Prediction p;
  const int n = num_qubits();
  p.per_qubit_z.resize(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (int q = 0; q < n; ++q) {
    p.per_qubit_z[static_cast<std::size_t>(q)] = state.expectation_z(q);
    sum += p.per_qubit_z[static_cast<std::size_t>(q)];
  }
  if (decoding_ == Decoding::Mean) {
    p.score = sum / n;
  } else if (decoding_ == Decoding::Qubit0) {
    p.score = p.per_qubit_z[0];
  } else {
    double parity = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const double w = std::norm(amps[i]);
      parity += (std::popcount(i) & 1) ? -w : w;
    }
    p.score = parity;
  }
  p.score = std::clamp(p.score, -1.0, 1.0);
  if (std::abs(p.score) < kScoreTieTolerance) p.score = 0.0;
  p.label = label_of(p.score);
  return p;
}

Prediction QnnModel::forward(std::span<const double> raw_features) const { return forward(raw_features, theta_); }

Prediction QnnModel::forward(std::span<const double> raw_features, std::span<const double> theta) const {
  if (raw_features.size() != static_cast<std::size_t>(num_qubits())) {
    throw UsageError("model expects " + std::to_string(num_qubits()) + " features, got " +
                     std::to_string(raw_features.size()));
  }
  const auto scaled = data::apply_scaling(scaling_, raw_features);
  return readout(encode(scaled), circuit::bind(ansatz_, {}, theta));
}

namespace {

void check_dataset(const QnnModel& model, const data::Dataset& ds) {
  if (ds.num_rows() == 0) throw UsageError("dataset is empty");
  if (ds.num_features() != static_cast<std::size_t>(model.num_qubits())) {
    throw UsageError("dataset has " + std::to_string(ds.num_features()) + " features, model expects " +
                     std::to_string(model.num_qubits()));
  }
  if (!model.feature_names().empty() && model.feature_names() != ds.feature_names) {
    throw UsageError("dataset feature names do not match the model's");
  }
}

}  // namespace

double loss(const QnnModel& model, const data::Dataset& ds, std::span<const double> theta) {
  check_dataset(model, ds);
  const auto gates = circuit::bind(model.ansatz(), {}, theta);
  double total = 0.0;
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    const auto state = model.encode(data::apply_scaling(model.scaling(), ds.row(i)));
    const double diff = model.readout(state, gates).score - data::target_of(ds.labels[i]);
    total += diff * diff;
  }
  return total / static_cast<double>(ds.num_rows());
}

double accuracy(const QnnModel& model, const data::Dataset& ds) {
  check_dataset(model, ds);
  const auto gates = circuit::bind(model.ansatz(), {}, model.theta());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    const auto state = model.encode(data::apply_scaling(model.scaling(), ds.row(i)));
    hits += model.readout(state, gates).label == ds.labels[i];
  }
  return static_cast<double>(hits) / static_cast<double>(ds.num_rows());
}

CachedObjective::CachedObjective(const QnnModel& model, const data::Dataset& ds) : model_(&model) {
  check_dataset(model, ds);
  states_.reserve(ds.num_rows());
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    states_.push_back(model.encode(data::apply_scaling(model.scaling(), ds.row(i))));
    targets_.push_back(data::target_of(ds.labels[i]));
  }
}

double CachedObjective::operator()(std::span<const double> theta) const {
  const auto gates = circuit::bind(model_->ansatz(), {}, theta);
  double total = 0.0;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const double diff = model_->readout(states_[i], gates).score - targets_[i];
    total += diff * diff;
  }
  return total / static_cast<double>(states_.size());
}

nlohmann::json to_json(const QnnModel& model) {
  if (!model.spec()) throw UsageError("only models built from a ModelSpec can be serialized");
  const ModelSpec& s = *model.spec();
  nlohmann::json doc;
  doc["format"] = "qvc-model";
  doc["version"] = 1;
  doc["ansatz"] = std::string(circuit::code(s.ansatz));
  doc["entanglement"] = std::string(circuit::code(s.entangle));
  doc["num_rep"] = s.num_rep;
  doc["num_qubits"] = s.num_qubits;
  doc["rng_seed"] = s.rng_seed;
  doc["decoding"] = std::string(code(s.decoding));
  doc["theta"] = std::vector<double>(model.theta().begin(), model.theta().end());
  doc["scaling"] = {{"lower", model.scaling().lower},
                    {"upper", model.scaling().upper},
                    {"min", model.scaling().min},
                    {"max", model.scaling().max}};
  doc["feature_names"] = model.feature_names();
  return doc;
}

QnnModel model_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format") != "qvc-model") throw LoadError("not a qvc model document");
    ModelSpec s;
    const auto ansatz = circuit::parse_ansatz(doc.at("ansatz").get<std::string>());
    const auto ent = circuit::parse_entanglement(doc.at("entanglement").get<std::string>());
    const auto dec = parse_decoding(doc.value("decoding", std::string("mean")));
    if (!ansatz || !ent || !dec) throw LoadError("unknown ansatz, entanglement or decoding code");
    s.ansatz = *ansatz;
    s.entangle = *ent;
    s.decoding = *dec;
    s.num_rep = doc.at("num_rep").get<int>();
    s.num_qubits = doc.at("num_qubits").get<int>();
    s.rng_seed = doc.at("rng_seed").get<std::uint64_t>();
    data::ScalingSpec scaling;
    const auto& sc = doc.at("scaling");
    scaling.lower = sc.at("lower").get<double>();
    scaling.upper = sc.at("upper").get<double>();
    scaling.min = sc.at("min").get<std::vector<double>>();
    scaling.max = sc.at("max").get<std::vector<double>>();
    QnnModel model = QnnModel::build(s, std::move(scaling), doc.at("feature_names").get<std::vector<std::string>>());
    model.set_theta(doc.at("theta").get<std::vector<double>>());
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("malformed model document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw LoadError(std::string("inconsistent model document: ") + e.what());
  }
}

void save_model(const QnnModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(model).dump(2) << '\n';
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

QnnModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
  return model_from_json(doc);
}

}  // namespace qvc::model
