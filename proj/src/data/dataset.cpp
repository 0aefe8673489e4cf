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

#include "qvc/data/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qvc/error.hpp"
#include "qvc/random.hpp"

namespace qvc::data {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_number(std::string_view cell) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

void append_number(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, ptr);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void Dataset::validate() const {
  if (values.size() != labels.size() * feature_names.size()) {
    throw UsageError("dataset shape mismatch: " + std::to_string(values.size()) + " values for " +
                     std::to_string(labels.size()) + " rows x " + std::to_string(feature_names.size()) +
                     " features");
  }
  if (importance_order) {
    std::set<std::string> known(feature_names.begin(), feature_names.end());
    std::set<std::string> seen;
    for (const auto& name : *importance_order) {
      if (!known.count(name)) throw UsageError("importance order names unknown feature '" + name + "'");
      if (!seen.insert(name).second) throw UsageError("importance order repeats feature '" + name + "'");
    }
  }
}

Dataset parse_csv(std::string_view text, const std::string& source_name) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw LoadError(source_name + ": empty file (header expected)");

  const auto header = split_commas(lines[0]);
  int label_col = -1;
  Dataset ds;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "label") {
      if (label_col >= 0) throw LoadError(source_name + ": duplicate 'label' column");
      label_col = static_cast<int>(c);
    } else {
      if (header[c].empty()) throw LoadError(source_name + ": empty column name at column " + std::to_string(c + 1));
      ds.feature_names.emplace_back(header[c]);
    }
  }
  if (label_col < 0) throw LoadError(source_name + ": missing 'label' column");
  {
    std::set<std::string> uniq(ds.feature_names.begin(), ds.feature_names.end());
    if (uniq.size() != ds.feature_names.size()) throw LoadError(source_name + ": duplicate feature names in header");
  }

  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (trim(lines[r]).empty()) continue;
    const auto cells = split_commas(lines[r]);
    const std::string where = source_name + ": row " + std::to_string(r + 1);
    if (cells.size() != header.size()) {
      throw LoadError(where + ": expected " + std::to_string(header.size()) + " cells, found " +
                      std::to_string(cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto value = parse_number(cells[c]);
      const std::string col = "column " + std::to_string(c + 1) + " ('" + std::string(header[c]) + "')";
      if (!value) throw LoadError(where + ", " + col + ": not a finite number: '" + std::string(cells[c]) + "'");
      if (static_cast<int>(c) == label_col) {
        if (*value == 1.0) {
          ds.labels.push_back(Label::Valid);
        } else if (*value == 0.0) {
          ds.labels.push_back(Label::Invalid);
        } else {
          throw LoadError(where + ", " + col + ": label must be 0 or 1");
        }
      } else {
        ds.values.push_back(*value);
      }
    }
  }
  return ds;
}

Dataset load_csv(const std::filesystem::path& path) { return parse_csv(read_file(path), path.string()); }

std::string format_csv(const Dataset& ds) {
  ds.validate();
  std::string out;
  for (const auto& name : ds.feature_names) {
    out += name;
    out += ',';
  }
  out += "label\n";
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    for (double v : ds.row(i)) {
      append_number(out, v);
      out += ',';
    }
    out += ds.labels[i] == Label::Valid ? "1\n" : "0\n";
  }
  return out;
}

void write_csv(const Dataset& ds, const std::filesystem::path& path) { write_file(path, format_csv(ds)); }

std::vector<std::string> read_importance(const std::filesystem::path& path) {
  std::vector<std::string> order;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto name = trim(line);
    if (!name.empty()) order.emplace_back(name);
  }
  return order;
}

void write_importance(const std::vector<std::string>& order, const std::filesystem::path& path) {
  std::string text;
  for (const auto& name : order) text += name + "\n";
  write_file(path, text);
}

void set_importance(Dataset& ds, std::vector<std::string> order) {
  ds.importance_order = std::move(order);
  try {
    ds.validate();
  } catch (const UsageError& e) {
    ds.importance_order.reset();
    throw ConfigError(e.what());
  }
}

std::vector<FeatureScore> feature_scores(const Dataset& ds) {
  ds.validate();
  const std::size_t m = ds.num_rows();
  const std::size_t f = ds.num_features();
  std::vector<double> y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = ds.labels[i] == Label::Valid ? 1.0 : 0.0;
  const double y_mean = m ? std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(m) : 0.0;
  double syy = 0.0;
  for (double v : y) syy += (v - y_mean) * (v - y_mean);

  std::vector<FeatureScore> scores(f);
  for (std::size_t j = 0; j < f; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < m; ++i) mean += ds.at(i, j);
    mean /= static_cast<double>(std::max<std::size_t>(m, 1));
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double dx = ds.at(i, j) - mean;
      sxx += dx * dx;
      sxy += dx * (y[i] - y_mean);
    }
    scores[j].name = ds.feature_names[j];
    scores[j].score = sxx > 0.0 && syy > 0.0 ? std::min(1.0, std::abs(sxy) / std::sqrt(sxx * syy)) : 0.0;
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const FeatureScore& a, const FeatureScore& b) { return a.score > b.score; });
  return scores;
}

std::vector<std::string> rank_features(const Dataset& ds) {
  std::vector<std::string> names;
  for (auto& s : feature_scores(ds)) names.push_back(std::move(s.name));
  return names;
}

Dataset select_features(const Dataset& ds, const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < ds.num_features(); ++j) index.emplace(ds.feature_names[j], j);
  std::vector<std::size_t> cols;
  std::string missing;
  for (const auto& name : names) {
    const auto it = index.find(name);
    if (it == index.end()) {
      missing += (missing.empty() ? "" : ", ") + name;
    } else {
      cols.push_back(it->second);
    }
  }
  if (!missing.empty()) throw ConfigError("dataset lacks feature(s): " + missing);

  Dataset out;
  out.feature_names = names;
  out.labels = ds.labels;
  out.values.reserve(ds.num_rows() * cols.size());
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    for (std::size_t c : cols) out.values.push_back(ds.at(i, c));
  }
  out.importance_order = names;
  return out;
}

Dataset select_top_k(const Dataset& ds, int k) {
  const auto order = ds.importance_order ? *ds.importance_order : rank_features(ds);
  if (k < 1 || static_cast<std::size_t>(k) > order.size()) {
    throw ConfigError("cannot select top " + std::to_string(k) + " of " + std::to_string(order.size()) +
                      " ranked features");
  }
  return select_features(ds, std::vector<std::string>(order.begin(), order.begin() + k));
}

std::pair<Dataset, Dataset> split_rows(const Dataset& ds, std::size_t n_first) {
  if (n_first > ds.num_rows()) {
    throw UsageError("split point " + std::to_string(n_first) + " exceeds " + std::to_string(ds.num_rows()) +
                     " rows");
  }
  const std::size_t f = ds.num_features();
  Dataset a, b;
  a.feature_names = b.feature_names = ds.feature_names;
  a.importance_order = b.importance_order = ds.importance_order;
  const auto cut = static_cast<std::ptrdiff_t>(n_first);
  a.labels.assign(ds.labels.begin(), ds.labels.begin() + cut);
  b.labels.assign(ds.labels.begin() + cut, ds.labels.end());
  a.values.assign(ds.values.begin(), ds.values.begin() + cut * static_cast<std::ptrdiff_t>(f));
  b.values.assign(ds.values.begin() + cut * static_cast<std::ptrdiff_t>(f), ds.values.end());
  return {std::move(a), std::move(b)};
}

ScalingSpec fit_scaling(const Dataset& train, double lower, double upper) {
  train.validate();
  if (train.num_rows() == 0) throw UsageError("cannot fit scaling on an empty dataset");
  if (!(lower < upper)) throw ConfigError("scaling range must satisfy lower < upper");
  ScalingSpec spec;
  spec.lower = lower;
  spec.upper = upper;
  const std::size_t f = train.num_features();
  spec.min.assign(f, 0.0);
  spec.max.assign(f, 0.0);
  for (std::size_t j = 0; j < f; ++j) {
    double lo = train.at(0, j), hi = lo;
    for (std::size_t i = 1; i < train.num_rows(); ++i) {
      lo = std::min(lo, train.at(i, j));
      hi = std::max(hi, train.at(i, j));
    }
    spec.min[j] = lo;
    spec.max[j] = hi;
  }
  return spec;
}

std::vector<double> apply_scaling(const ScalingSpec& spec, std::span<const double> row) {
  if (row.size() != spec.min.size()) {
    throw UsageError("scaling expects " + std::to_string(spec.min.size()) + " features, got " +
                     std::to_string(row.size()));
  }
  std::vector<double> out(row.size());
  const double width = spec.upper - spec.lower;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const double span = spec.max[j] - spec.min[j];
    if (!(span > 0.0)) {
      out[j] = spec.lower;
      continue;
    }
    const double t = std::clamp((row[j] - spec.min[j]) / span, 0.0, 1.0);
    out[j] = spec.lower + width * t;
  }
  return out;
}

Dataset generate_synthetic(int num_rows, int num_features, double class_separation, std::uint64_t seed,
                           const SyntheticOptions& options) {
  if (num_rows < 2) throw UsageError("synthetic dataset needs at least 2 rows");
  if (num_features < 2) throw UsageError("synthetic dataset needs at least 2 features");
  if (!(options.informative_fraction > 0.0 && options.informative_fraction <= 1.0)) {
    throw ConfigError("informative_fraction must be in (0, 1]");
  }
  const auto m = static_cast<std::size_t>(num_rows);
  const auto f = static_cast<std::size_t>(num_features);
  const auto informative = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::ceil(options.informative_fraction * static_cast<double>(f) - 1e-9)), 1, f);

  Rng rng(seed);
  Dataset ds;
  for (std::size_t j = 0; j < f; ++j) ds.feature_names.push_back("f" + std::to_string(j));

  ds.labels.assign(m, Label::Invalid);
  std::fill(ds.labels.begin(), ds.labels.begin() + static_cast<std::ptrdiff_t>(m / 2), Label::Valid);
  shuffle(ds.labels.begin(), ds.labels.end(), rng);

  std::vector<double> direction(informative);
  double norm = 0.0;
  for (auto& d : direction) {
    d = standard_normal(rng);
    norm += d * d;
  }
  norm = std::sqrt(norm);
  for (auto& d : direction) d /= norm;

  ds.values.resize(m * f);
  for (std::size_t i = 0; i < m; ++i) {
    const double half = (ds.labels[i] == Label::Valid ? 0.5 : -0.5) * class_separation;
    for (std::size_t j = 0; j < f; ++j) {
      double v = standard_normal(rng);
      if (j < informative) v += half * direction[j];
      ds.values[i * f + j] = v;
    }
  }

  std::vector<std::size_t> order(informative);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(direction[a]) > std::abs(direction[b]); });
  std::vector<std::string> names;
  for (std::size_t j : order) names.push_back(ds.feature_names[j]);
  for (std::size_t j = informative; j < f; ++j) names.push_back(ds.feature_names[j]);
  ds.importance_order = std::move(names);
  return ds;
}

}  // namespace qvc::data
