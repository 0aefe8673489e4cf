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

#include "qvc/circuit/template.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "qvc/error.hpp"

namespace qvc::circuit {

using sim::GateKind;

double zz_phi(double first, double second) noexcept {
  return (std::numbers::pi - first) * (std::numbers::pi - second);
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string describe(const TemplateGate& gate, std::size_t index) {
  return "gate " + std::to_string(index) + " (" + std::string(sim::gate_name(gate.kind)) + ")";
}

}  // namespace

void CircuitTemplate::validate() const {
  if (num_qubits < 1) throw ConfigError("template needs at least one qubit");
  if (num_trainable < 0 || num_feature_slots < 0) throw ConfigError("negative slot count");
  bool uses_feature = false;
  bool uses_theta = false;
  std::vector<bool> seen(static_cast<std::size_t>(num_trainable), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const TemplateGate& g = gates[i];
    const int arity = sim::arity(g.kind);
    for (int q = 0; q < arity; ++q) {
      if (g.qubits[q] < 0 || g.qubits[q] >= num_qubits) {
        throw ConfigError(describe(g, i) + ": qubit out of range");
      }
    }
    if (arity == 2 && g.qubits[0] == g.qubits[1]) {
      throw ConfigError(describe(g, i) + ": needs two distinct qubits");
    }
    const bool has_angle = !std::holds_alternative<NoAngle>(g.angle);
    if (has_angle != sim::takes_angle(g.kind)) {
      throw ConfigError(describe(g, i) + ": angle reference does not match gate kind");
    }
    std::visit(Overloaded{
                   [](const NoAngle&) {},
                   [](const FixedAngle&) {},
                   [&](const FeatureAngle& a) {
                     uses_feature = true;
                     if (a.slot < 0 || a.slot >= num_feature_slots) {
                       throw ConfigError(describe(g, i) + ": feature slot out of range");
                     }
                   },
                   [&](const FeaturePairAngle& a) {
                     uses_feature = true;
                     if (a.first < 0 || a.first >= num_feature_slots || a.second < 0 ||
                         a.second >= num_feature_slots) {
                       throw ConfigError(describe(g, i) + ": feature slot out of range");
                     }
                   },
                   [&](const TrainableAngle& a) {
                     uses_theta = true;
                     if (a.slot < 0 || a.slot >= num_trainable) {
                       throw ConfigError(describe(g, i) + ": trainable slot out of range");
                     }
                     seen[static_cast<std::size_t>(a.slot)] = true;
                   },
               },
               g.angle);
  }
  if (uses_feature && uses_theta) {
    throw ConfigError("template mixes feature and trainable slots");
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ConfigError("template declares trainable slots that no gate references");
  }
}

int CircuitTemplate::count_distinct_trainable() const {
  std::set<int> slots;
  for (const TemplateGate& g : gates) {
    if (const auto* t = std::get_if<TrainableAngle>(&g.angle)) slots.insert(t->slot);
  }
  return static_cast<int>(slots.size());
}

std::vector<sim::GateInstance> bind(const CircuitTemplate& tmpl, std::span<const double> features,
                                    std::span<const double> theta) {
  if (features.size() != static_cast<std::size_t>(tmpl.num_feature_slots)) {
    throw UsageError("expected " + std::to_string(tmpl.num_feature_slots) + " feature values, got " +
                     std::to_string(features.size()));
  }
  if (theta.size() != static_cast<std::size_t>(tmpl.num_trainable)) {
    throw UsageError("expected " + std::to_string(tmpl.num_trainable) + " trainable angles, got " +
                     std::to_string(theta.size()));
  }
  std::vector<sim::GateInstance> out;
  out.reserve(tmpl.gates.size());
  for (const TemplateGate& g : tmpl.gates) {
    const std::optional<double> angle = std::visit(
        Overloaded{
            [](const NoAngle&) -> std::optional<double> { return std::nullopt; },
            [](const FixedAngle& a) -> std::optional<double> { return a.value; },
            [&](const FeatureAngle& a) -> std::optional<double> {
              return a.scale * features[static_cast<std::size_t>(a.slot)];
            },
            [&](const FeaturePairAngle& a) -> std::optional<double> {
              return a.scale * zz_phi(features[static_cast<std::size_t>(a.first)],
                                      features[static_cast<std::size_t>(a.second)]);
            },
            [&](const TrainableAngle& a) -> std::optional<double> {
              return theta[static_cast<std::size_t>(a.slot)];
            },
        },
        g.angle);
    out.push_back(sim::GateInstance{g.kind, g.qubits, angle});
  }
  return out;
}

nlohmann::json to_json(const CircuitTemplate& tmpl) {
  nlohmann::json gates = nlohmann::json::array();
  for (const TemplateGate& g : tmpl.gates) {
    nlohmann::json entry;
    entry["kind"] = std::string(sim::gate_name(g.kind));
    if (sim::arity(g.kind) == 2) {
      entry["qubits"] = {g.qubits[0], g.qubits[1]};
    } else {
      entry["qubits"] = {g.qubits[0]};
    }
    std::visit(Overloaded{
                   [](const NoAngle&) {},
                   [&](const FixedAngle& a) { entry["angle"] = a.value; },
                   [&](const FeatureAngle& a) {
                     entry["feature_slot"] = a.slot;
                     entry["scale"] = a.scale;
                   },
                   [&](const FeaturePairAngle& a) {
                     entry["phi"] = {a.first, a.second};
                     entry["scale"] = a.scale;
                   },
                   [&](const TrainableAngle& a) { entry["theta_slot"] = a.slot; },
               },
               g.angle);
    gates.push_back(std::move(entry));
  }
  return {{"num_qubits", tmpl.num_qubits},
          {"num_trainable", tmpl.num_trainable},
          {"num_feature_slots", tmpl.num_feature_slots},
          {"gates", std::move(gates)}};
}

CircuitTemplate template_from_json(const nlohmann::json& doc) {
  try {
    CircuitTemplate tmpl;
    tmpl.num_qubits = doc.at("num_qubits").get<int>();
    tmpl.num_trainable = doc.at("num_trainable").get<int>();
    tmpl.num_feature_slots = doc.at("num_feature_slots").get<int>();
    for (const auto& entry : doc.at("gates")) {
      TemplateGate g;
      const auto name = entry.at("kind").get<std::string>();
      const auto kind = sim::parse_gate_kind(name);
      if (!kind) throw LoadError("unknown gate kind '" + name + "'");
      g.kind = *kind;
      const auto& qubits = entry.at("qubits");
      if (qubits.size() != static_cast<std::size_t>(sim::arity(g.kind))) {
        throw LoadError("gate " + name + " has wrong number of qubits");
      }
      g.qubits[0] = qubits[0].get<int>();
      g.qubits[1] = qubits.size() > 1 ? qubits[1].get<int>() : g.qubits[0];
      const double scale = entry.value("scale", 1.0);
      if (entry.contains("angle")) {
        g.angle = FixedAngle{entry["angle"].get<double>()};
      } else if (entry.contains("feature_slot")) {
        g.angle = FeatureAngle{entry["feature_slot"].get<int>(), scale};
      } else if (entry.contains("phi")) {
        g.angle = FeaturePairAngle{entry["phi"].at(0).get<int>(), entry["phi"].at(1).get<int>(), scale};
      } else if (entry.contains("theta_slot")) {
        g.angle = TrainableAngle{entry["theta_slot"].get<int>()};
      }
      tmpl.gates.push_back(g);
    }
    tmpl.validate();
    return tmpl;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("malformed circuit JSON: ") + e.what());
  } catch (const ConfigError& e) {
    throw LoadError(std::string("invalid circuit: ") + e.what());
  }
}

namespace {

std::string angle_label(const AngleRef& angle) {
  return std::visit(Overloaded{
                        [](const NoAngle&) { return std::string(); },
                        [](const FixedAngle& a) {
                          char buf[32];
                          std::snprintf(buf, sizeof buf, "%.4g", a.value);
                          return std::string(buf);
                        },
                        [](const FeatureAngle& a) {
                          char buf[48];
                          std::snprintf(buf, sizeof buf, "%gv%d", a.scale, a.slot);
                          return std::string(buf);
                        },
                        [](const FeaturePairAngle& a) {
                          char buf[64];
                          std::snprintf(buf, sizeof buf, "%gphi(v%d,v%d)", a.scale, a.first, a.second);
                          return std::string(buf);
                        },
                        [](const TrainableAngle& a) { return "t" + std::to_string(a.slot); },
                    },
                    angle);
}

std::string with_angle(std::string_view name, const AngleRef& angle) {
  std::string label(name);
  const std::string arg = angle_label(angle);
  if (!arg.empty()) label += "(" + arg + ")";
  return label;
}

// Per-qubit cell text for one gate; empty for untouched qubits.
std::vector<std::string> cells(const TemplateGate& g, int num_qubits) {
  std::vector<std::string> out(static_cast<std::size_t>(num_qubits));
  const int a = g.qubits[0];
  if (sim::arity(g.kind) == 1) {
    out[a] = with_angle(sim::gate_name(g.kind), g.angle);
    return out;
  }
  const int b = g.qubits[1];
  for (int q = std::min(a, b) + 1; q < std::max(a, b); ++q) out[q] = "|";
  switch (g.kind) {
    case GateKind::RXX:
    case GateKind::RYY:
    case GateKind::RZZ:
      out[a] = out[b] = with_angle(sim::gate_name(g.kind), g.angle);
      return out;
    case GateKind::CX: out[b] = "X"; break;
    case GateKind::CY: out[b] = "Y"; break;
    case GateKind::CZ: out[b] = "Z"; break;
    case GateKind::CRX: out[b] = with_angle("RX", g.angle); break;
    case GateKind::CRY: out[b] = with_angle("RY", g.angle); break;
    case GateKind::CRZ: out[b] = with_angle("RZ", g.angle); break;
    case GateKind::CPhase: out[b] = with_angle("P", g.angle); break;
    default: break;
  }
  out[a] = "*";
  return out;
}

}  // namespace

std::string render_ascii(const CircuitTemplate& tmpl) {
  const int n = tmpl.num_qubits;
  // Greedy layering: a gate occupies every qubit between its endpoints.
  std::vector<int> next_free(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<std::string>> columns;
  for (const TemplateGate& g : tmpl.gates) {
    int lo = g.qubits[0];
    int hi = g.qubits[0];
    if (sim::arity(g.kind) == 2) {
      lo = std::min(g.qubits[0], g.qubits[1]);
      hi = std::max(g.qubits[0], g.qubits[1]);
    }
    int col = 0;
    for (int q = lo; q <= hi; ++q) col = std::max(col, next_free[q]);
    if (col >= static_cast<int>(columns.size())) {
      columns.resize(static_cast<std::size_t>(col) + 1, std::vector<std::string>(static_cast<std::size_t>(n)));
    }
    const auto c = cells(g, n);
    for (int q = lo; q <= hi; ++q) {
      columns[col][q] = c[q];
      next_free[q] = col + 1;
    }
  }
  std::vector<std::string> rows(static_cast<std::size_t>(n));
  const int label_width = static_cast<int>(std::to_string(n - 1).size()) + 1;
  for (int q = 0; q < n; ++q) {
    std::string head = "q" + std::to_string(q);
    head.resize(static_cast<std::size_t>(label_width), ' ');
    rows[q] = head + ": -";
  }
  for (const auto& column : columns) {
    std::size_t width = 1;
    for (const auto& cell : column) width = std::max(width, cell.size());
    for (int q = 0; q < n; ++q) {
      const std::string cell = column[q].empty() ? std::string("-") : column[q];
      const std::size_t left = (width - cell.size()) / 2;
      const std::size_t right = width - cell.size() - left;
      rows[q] += std::string(left, '-') + cell + std::string(right, '-') + "-";
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) out << row << '\n';
  return out.str();
}

}  // namespace qvc::circuit
