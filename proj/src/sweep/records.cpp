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

#include "qvc/sweep/records.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qvc/error.hpp"

namespace qvc::sweep {

namespace {

void append_real(std::string& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

template <typename T>
T parse_field(std::string_view cell, std::string_view name) {
  T value{};
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw LoadError("bad " + std::string(name) + " value '" + std::string(cell) + "'");
  }
  return value;
}

}  // namespace

std::string format_record(const RunRecord& r) {
  std::string out;
  out += std::to_string(r.config.num_feat) + ',' + std::to_string(r.config.num_rep) + ',';
  out += std::string(circuit::code(r.config.entangle)) + ',' + std::string(circuit::code(r.config.ansatz)) + ',';
  out += std::to_string(r.run) + ',' + std::to_string(r.seed) + ',';
  append_real(out, r.train_accuracy);
  out += ',';
  append_real(out, r.test_accuracy);
  out += ',';
  append_real(out, r.final_loss);
  out += ',' + std::to_string(r.evals) + ',' + std::to_string(r.wall_ms);
  return out;
}

RunRecord parse_record(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == line.npos ? line.npos : comma - start));
    if (comma == line.npos) break;
    start = comma + 1;
  }
  if (cells.size() != 11) throw LoadError("expected 11 fields, found " + std::to_string(cells.size()));
  RunRecord r;
  r.config.num_feat = parse_field<int>(cells[0], "num_feat");
  r.config.num_rep = parse_field<int>(cells[1], "num_rep");
  const auto ent = circuit::parse_entanglement(cells[2]);
  if (!ent) throw LoadError("unknown entanglement '" + std::string(cells[2]) + "'");
  const auto ans = circuit::parse_ansatz(cells[3]);
  if (!ans) throw LoadError("unknown ansatz '" + std::string(cells[3]) + "'");
  r.config.entangle = *ent;
  r.config.ansatz = *ans;
  r.run = parse_field<int>(cells[4], "run");
  r.seed = parse_field<std::uint64_t>(cells[5], "seed");
  r.train_accuracy = parse_field<double>(cells[6], "train_accuracy");
  r.test_accuracy = parse_field<double>(cells[7], "test_accuracy");
  r.final_loss = parse_field<double>(cells[8], "final_loss");
  r.evals = parse_field<int>(cells[9], "evals");
  r.wall_ms = parse_field<std::int64_t>(cells[10], "wall_ms");
  return r;
}

std::vector<RunRecord> parse_results(std::string_view text, const std::string& source_name) {
  std::vector<RunRecord> records;
  std::size_t start = 0;
  int line_no = 0;
  bool header_seen = false;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == text.npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kResultsHeader) throw LoadError(source_name + ": unexpected results header");
      header_seen = true;
      continue;
    }
    try {
      records.push_back(parse_record(line));
    } catch (const LoadError& e) {
      throw LoadError(source_name + ": line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!header_seen) throw LoadError(source_name + ": empty results file");
  return records;
}

std::vector<RunRecord> read_results(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_results(ss.str(), path.string());
}

void write_results(const std::vector<RunRecord>& records, const std::filesystem::path& path) {
  std::string text(kResultsHeader);
  text += '\n';
  for (const auto& r : records) text += format_record(r) + '\n';
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qvc::sweep
