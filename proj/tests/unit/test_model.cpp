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

#include <gtest/gtest.h>

#include <filesystem>
#include <numbers>
#include <random>

#include "qvc/error.hpp"
#include "qvc/model/qnn.hpp"
#include "qvc/model/training.hpp"

using namespace qvc;
using namespace qvc::model;
using circuit::AnsatzKind;
using circuit::EntanglementKind;

namespace {

constexpr double kPi = std::numbers::pi;

data::ScalingSpec unit_scaling(int n) {
  data::ScalingSpec s;
  s.lower = 0.0;
  s.upper = kPi;
  s.min.assign(static_cast<std::size_t>(n), 0.0);
  s.max.assign(static_cast<std::size_t>(n), 1.0);
  return s;
}

circuit::CircuitTemplate empty_feature_map(int n) {
  circuit::CircuitTemplate t;
  t.num_qubits = n;
  t.num_feature_slots = n;
  return t;
}

circuit::CircuitTemplate ry_layer(int n) {
  circuit::CircuitTemplate t;
  t.num_qubits = n;
  for (int q = 0; q < n; ++q) t.gates.push_back({sim::GateKind::RY, {q, q}, circuit::TrainableAngle{q}});
  t.num_trainable = n;
  return t;
}

// Hand-built model whose score is controlled directly by theta.
QnnModel ry_model(int n) { return QnnModel(empty_feature_map(n), ry_layer(n), unit_scaling(n), {}); }

data::Dataset rows(int n, const std::vector<std::vector<double>>& xs, const std::vector<data::Label>& labels) {
  data::Dataset ds;
  for (int j = 0; j < n; ++j) ds.feature_names.push_back("x" + std::to_string(j));
  for (const auto& r : xs) ds.values.insert(ds.values.end(), r.begin(), r.end());
  ds.labels = labels;
  return ds;
}

}  // namespace

TEST(Forward, ZeroThetaRealAmplitudesScoresZero) {
  ModelSpec spec{AnsatzKind::RealAmplitudes, EntanglementKind::Full, 2, 3, 0};
  const auto model = QnnModel::build(spec, unit_scaling(3), {"a", "b", "c"});
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> v{u(rng), u(rng), u(rng)};
    const auto p = model.forward(v);
    EXPECT_NEAR(p.score, 0.0, 1e-12);
    EXPECT_EQ(p.label, data::Label::Valid) << p.score;
    for (double z : p.per_qubit_z) EXPECT_NEAR(z, 0.0, 1e-12);
  }
  EXPECT_EQ(label_of(0.0), data::Label::Valid);
  EXPECT_EQ(label_of(-1e-300), data::Label::Invalid);
}

TEST(Forward, HandBuiltRyPi) {
  auto model = ry_model(2);
  model.set_theta({kPi, kPi});
  const auto p = model.forward(std::vector<double>{0.1, 0.9});
  EXPECT_NEAR(p.per_qubit_z[0], -1.0, 1e-12);
  EXPECT_NEAR(p.per_qubit_z[1], -1.0, 1e-12);
  EXPECT_NEAR(p.score, -1.0, 1e-12);
  EXPECT_EQ(p.label, data::Label::Invalid);
}

TEST(Forward, ScoreIsMeanOfExpectations) {
  auto model = ry_model(3);
  model.set_theta({0.3, 2.0, -1.1});
  const auto p = model.forward(std::vector<double>{0, 0, 0});
  EXPECT_NEAR(p.score, (std::cos(0.3) + std::cos(2.0) + std::cos(-1.1)) / 3, 1e-12);
}

TEST(Forward, ParityDecoding) {
  QnnModel model(empty_feature_map(2), ry_layer(2), unit_scaling(2), {}, Decoding::Parity);
  model.set_theta({0.7, 1.9});
  EXPECT_NEAR(model.forward(std::vector<double>{0, 0}).score, std::cos(0.7) * std::cos(1.9), 1e-12);
}

TEST(Forward, FirstQubitDecoding) {
  QnnModel model(empty_feature_map(2), ry_layer(2), unit_scaling(2), {}, Decoding::Qubit0);
  model.set_theta({0.7, 1.9});
  EXPECT_NEAR(model.forward(std::vector<double>{0, 0}).score, std::cos(0.7), 1e-12);
}

// RZ layers and XX+YY couplings conserve Hamming weight, so the total
// magnetisation and the parity are fixed by the feature map alone; only a
// single-qubit readout can see theta.
TEST(Forward, ExcitationPreservingAggregatesIgnoreTheta) {
  for (auto kind : {AnsatzKind::ExcitationPreservingIswap, AnsatzKind::ExcitationPreservingFsim}) {
    for (auto dec : {Decoding::Mean, Decoding::Parity, Decoding::Qubit0}) {
      ModelSpec spec{kind, EntanglementKind::Full, 2, 4, 0, dec};
      auto model = QnnModel::build(spec, unit_scaling(4), {});
      std::mt19937_64 rng(21);
      std::uniform_real_distribution<double> th(-kPi, kPi);
      const std::vector<double> x{0.2, 0.9, 0.4, 0.7};
      std::vector<double> t0(static_cast<std::size_t>(model.num_parameters())), t1 = t0;
      for (auto& a : t0) a = th(rng);
      for (auto& a : t1) a = th(rng);
      const double d = std::abs(model.forward(x, t0).score - model.forward(x, t1).score);
      if (dec == Decoding::Qubit0) {
        EXPECT_GT(d, 1e-3) << code(dec);
      } else {
        EXPECT_LT(d, 1e-12) << code(dec);
      }
    }
  }
}

TEST(Forward, BestCombinationScoresBounded) {
  ModelSpec spec{AnsatzKind::ExcitationPreservingIswap, EntanglementKind::ShiftedCircularAlternating, 7, 5, 3};
  auto model = QnnModel::build(spec, unit_scaling(5), {});
  ASSERT_EQ(model.num_parameters(), 75);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> v(-0.5, 1.5), th(-kPi, kPi);
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> theta(75), x(5);
    for (auto& a : theta) a = th(rng);
    for (auto& a : x) a = v(rng);
    const auto p = model.forward(x, theta);
    ASSERT_LE(std::abs(p.score), 1.0);
  }
}

TEST(Forward, DeterministicBitIdentical) {
  ModelSpec spec{AnsatzKind::EfficientSU2, EntanglementKind::Pairwise, 3, 4, 0};
  auto model = QnnModel::build(spec, unit_scaling(4), {});
  model.set_theta(opt::initial_theta(model.num_parameters(), 9));
  const std::vector<double> x{0.2, 0.4, 0.6, 0.8};
  const auto a = model.forward(x);
  const auto b = model.forward(x);
  EXPECT_EQ(a.per_qubit_z, b.per_qubit_z);
  EXPECT_EQ(a.score, b.score);
}

TEST(Forward, Errors) {
  const auto model = ry_model(2);
  EXPECT_THROW(model.forward(std::vector<double>{1.0}), UsageError);
  auto m = ry_model(2);
  EXPECT_THROW(m.set_theta({1.0}), UsageError);
  EXPECT_THROW(QnnModel(empty_feature_map(3), ry_layer(2), unit_scaling(2), {}), ConfigError);
}

TEST(Forward, DiagonalAnsatzCannotChangeExpectations) {
  const int n = 3;
  const auto fm = circuit::build_zz_feature_map(n);
  circuit::CircuitTemplate diag;
  diag.num_qubits = n;
  int slot = 0;
  for (int q = 0; q < n; ++q) diag.gates.push_back({sim::GateKind::RZ, {q, q}, circuit::TrainableAngle{slot++}});
  for (const auto& p : circuit::entanglement_pairs(EntanglementKind::Circular, n)) {
    diag.gates.push_back({sim::GateKind::RZZ, {p.control, p.target}, circuit::TrainableAngle{slot++}});
    diag.gates.push_back({sim::GateKind::CPhase, {p.control, p.target}, circuit::TrainableAngle{slot++}});
  }
  diag.num_trainable = slot;
  QnnModel model(fm, diag, unit_scaling(n), {});
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0), th(-kPi, kPi);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> x{u(rng), u(rng), u(rng)};
    std::vector<double> theta(static_cast<std::size_t>(slot));
    for (auto& a : theta) a = th(rng);
    const auto base = model.forward(x, std::vector<double>(static_cast<std::size_t>(slot), 0.0));
    const auto moved = model.forward(x, theta);
    for (int q = 0; q < n; ++q) EXPECT_NEAR(moved.per_qubit_z[q], base.per_qubit_z[q], 1e-12);
  }
}

TEST(Loss, Examples) {
  auto model = ry_model(2);
  const auto ds = rows(2, {{0, 0}}, {data::Label::Valid});
  // theta = pi/2 gives <Z> = 0 on both qubits, so score 0 against target +1.
  EXPECT_NEAR(loss(model, ds, std::vector<double>{kPi / 2, kPi / 2}), 1.0, 1e-12);
  // Scores equal their targets.
  const auto two = rows(2, {{0, 0}, {0, 0}}, {data::Label::Valid, data::Label::Valid});
  EXPECT_NEAR(loss(model, two, std::vector<double>{0.0, 0.0}), 0.0, 1e-15);
  // Scores 0.5 on both samples; targets +1 and -1: (0.25 + 2.25) / 2.
  const double a = std::acos(0.5);
  const auto mixed = rows(2, {{0, 0}, {0, 0}}, {data::Label::Valid, data::Label::Invalid});
  EXPECT_NEAR(loss(model, mixed, std::vector<double>{a, a}), 1.25, 1e-12);
  EXPECT_THROW(loss(model, rows(2, {}, {}), std::vector<double>{0, 0}), UsageError);
  EXPECT_THROW(loss(model, ds, std::vector<double>{0.0}), UsageError);
}

TEST(Loss, BoundedAndMatchesCache) {
  ModelSpec spec{AnsatzKind::RealAmplitudes, EntanglementKind::Linear, 2, 4, 0};
  const auto ds = data::select_top_k(data::generate_synthetic(40, 6, 2.0, 3), 4);
  auto model = QnnModel::build(spec, data::fit_scaling(ds), ds.feature_names);
  const CachedObjective cached(model, ds);
  for (int s = 0; s < 10; ++s) {
    const auto theta = opt::initial_theta(model.num_parameters(), static_cast<std::uint64_t>(s));
    const double l = loss(model, ds, theta);
    EXPECT_GE(l, 0.0);
    EXPECT_LE(l, 4.0);
    EXPECT_EQ(cached(theta), l);
  }
}

TEST(Accuracy, Examples) {
  auto model = ry_model(2);
  const std::vector<std::vector<double>> x(4, {0.0, 0.0});
  using data::Label;
  EXPECT_EQ(accuracy(model, rows(2, x, {Label::Valid, Label::Valid, Label::Valid, Label::Valid})), 1.0);
  EXPECT_EQ(accuracy(model, rows(2, x, {Label::Invalid, Label::Invalid, Label::Invalid, Label::Invalid})), 0.0);
  EXPECT_EQ(accuracy(model, rows(2, x, {Label::Valid, Label::Invalid, Label::Valid, Label::Valid})), 0.75);
  EXPECT_THROW(accuracy(model, rows(2, {}, {})), UsageError);
}

TEST(Persistence, JsonRoundTripBitExact) {
  for (auto kind : circuit::kAllAnsatze) {
    ModelSpec spec{kind, EntanglementKind::ShiftedCircularAlternating, 2, 4, 77, Decoding::Mean};
    const auto ds = data::select_top_k(data::generate_synthetic(30, 5, 1.0, 1), 4);
    auto model = QnnModel::build(spec, data::fit_scaling(ds, 0.6 * kPi, kPi), ds.feature_names);
    model.set_theta(opt::initial_theta(model.num_parameters(), 12));
    const auto path = std::filesystem::temp_directory_path() / "qvc_test_model.json";
    save_model(model, path);
    const auto back = load_model(path);
    EXPECT_EQ(back, model);
    EXPECT_EQ(back.forward(ds.row(0)).score, model.forward(ds.row(0)).score);
  }
  EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"format":"qvc-model"})")), LoadError);
  EXPECT_THROW(to_json(ry_model(2)), UsageError);
}

TEST(Persistence, PtdKeepsLabelButUsesPairwiseLayout) {
  ModelSpec spec{AnsatzKind::PauliTwoDesign, EntanglementKind::Full, 1, 4, 5};
  const auto model = QnnModel::build(spec, unit_scaling(4), {});
  EXPECT_EQ(model.spec()->entangle, EntanglementKind::Full);
  EXPECT_EQ(model.ansatz(), circuit::build_ansatz(AnsatzKind::PauliTwoDesign, 4, 1, EntanglementKind::Pairwise, 5));
}

TEST(Training, LearnsSeparableData) {
  const auto ds = data::select_top_k(data::generate_synthetic(300, 8, 3.0, 42), 4);
  const auto [train, test] = data::split_rows(ds, 200);
  TrainConfig cfg;
  cfg.spec = {AnsatzKind::RealAmplitudes, EntanglementKind::Full, 3, 4, 42};
  cfg.optimizer.max_iterations = 150;
  cfg.optimizer.seed = 42;
  const auto r = train_model(train, cfg);
  EXPECT_LE(r.optimization.evaluations_used, 150);
  EXPECT_EQ(r.train_accuracy, accuracy(r.model, train));
  EXPECT_EQ(r.final_loss, loss(r.model, train, r.model.theta()));
  EXPECT_GT(accuracy(r.model, test), 0.75);
}

TEST(Training, RejectsFeatureCountMismatch) {
  const auto ds = data::generate_synthetic(20, 5, 1.0, 1);
  TrainConfig cfg;
  cfg.spec.num_qubits = 4;
  EXPECT_THROW(train_model(ds, cfg), ConfigError);
}
