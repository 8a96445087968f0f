// Copyright 2026 The mcmrb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mcmrb/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace mcmrb {
namespace {

constexpr const char* kCurvesHeader = "protocol,qubit,length,seq_index,probability";

std::optional<Protocol> protocol_from_string(std::string_view name) {
  for (const Protocol p : kProtocols) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

std::optional<Qubit> qubit_from_string(std::string_view name) {
  if (name == "ancilla") return Qubit::Ancilla;
  if (name == "control") return Qubit::Control;
  return std::nullopt;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end()) {
    throw DataFormatError("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

double parse_probability(std::string_view token, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || ptr != token.end()) {
    throw DataFormatError("expected a number, got '" + std::string(token) + "'", line);
  }
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DataFormatError("probability out of [0, 1]", line);
  }
  return value;
}

SuiteData assemble_curves(
    const std::map<std::pair<int, int>, std::map<int, std::map<int, double>>>& cells) {
  SuiteData data;
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 2; ++q) {
      const auto it = cells.find({p, q});
      if (it == cells.end()) {
        throw DataFormatError(std::string("missing curve for ") +
                                  to_string(static_cast<Protocol>(p)) + "/" +
                                  to_string(static_cast<Qubit>(q)),
                              0);
      }
      DecayCurve& curve = data.curves[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      for (const auto& [length, by_seq] : it->second) {
        curve.lengths.push_back(length);
        std::vector<double> vals;
        vals.reserve(by_seq.size());
        for (const auto& [seq, prob] : by_seq) vals.push_back(prob);
        curve.samples.push_back(std::move(vals));
      }
      curve.recompute_stats();
    }
  }
  data.config.lengths = data.curves[0][0].lengths;
  data.config.num_sequences = static_cast<int>(data.curves[0][0].samples.front().size());
  data.noise_label = "ingested";
  return data;
}

}  // namespace

std::string format_double(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

void write_curves_csv(std::ostream& os, const SuiteData& data) {
  os << kCurvesHeader << "\n";
  for (const Protocol p : kProtocols) {
    for (const Qubit q : {Qubit::Control, Qubit::Ancilla}) {
      const DecayCurve& curve =
          data.curves[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      for (std::size_t i = 0; i < curve.lengths.size(); ++i) {
        for (std::size_t s = 0; s < curve.samples[i].size(); ++s) {
          os << to_string(p) << ',' << to_string(q) << ',' << curve.lengths[i] << ',' << s << ','
             << format_double(curve.samples[i][s]) << "\n";
        }
      }
    }
  }
}

void write_curves_csv(const std::filesystem::path& path, const SuiteData& data) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_curves_csv(os, data);
}

SuiteData read_curves_csv(std::istream& is) {
  std::string line;
  int line_number = 0;
  if (!std::getline(is, line) || line != kCurvesHeader) {
    throw DataFormatError(std::string("expected header '") + kCurvesHeader + "'", 1);
  }
  line_number = 1;

  std::map<std::pair<int, int>, std::map<int, std::map<int, double>>> cells;
  while (std::getline(is, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw DataFormatError("expected 5 comma-separated fields", line_number);
    }
    const auto protocol = protocol_from_string(fields[0]);
    if (!protocol) {
      throw DataFormatError("unknown protocol '" + std::string(fields[0]) + "'", line_number);
    }
    const auto qubit = qubit_from_string(fields[1]);
    if (!qubit) {
      throw DataFormatError("unknown qubit '" + std::string(fields[1]) + "'", line_number);
    }
    const int length = parse_int(fields[2], line_number);
    const int seq = parse_int(fields[3], line_number);
    if (length < 0 || seq < 0) {
      throw DataFormatError("length and seq_index must be non-negative", line_number);
    }
    const double prob = parse_probability(fields[4], line_number);
    auto& by_seq = cells[{static_cast<int>(*protocol), static_cast<int>(*qubit)}][length];
    if (!by_seq.emplace(seq, prob).second) {
      throw DataFormatError("duplicate (protocol, qubit, length, seq_index) row", line_number);
    }
  }
  if (cells.empty()) throw DataFormatError("no data rows", line_number);
  return assemble_curves(cells);
}

SuiteData read_curves_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  return read_curves_csv(is);
}

void write_curves_json(const std::filesystem::path& path, const SuiteData& data) {
  nlohmann::json j;
  for (const Protocol p : kProtocols) {
    for (const Qubit q : {Qubit::Control, Qubit::Ancilla}) {
      const DecayCurve& curve =
          data.curves[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      nlohmann::json entry;
      entry["lengths"] = curve.lengths;
      entry["samples"] = curve.samples;
      j["curves"][to_string(p)][to_string(q)] = std::move(entry);
    }
  }
  write_json(path, j);
}

SuiteData read_curves_json(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataFormatError(e.what(), 0);
  }
  SuiteData data;
  try {
    for (const Protocol p : kProtocols) {
      for (const Qubit q : {Qubit::Control, Qubit::Ancilla}) {
        const auto& entry = j.at("curves").at(to_string(p)).at(to_string(q));
        DecayCurve& curve =
            data.curves[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        curve.lengths = entry.at("lengths").get<std::vector<int>>();
        curve.samples = entry.at("samples").get<std::vector<std::vector<double>>>();
        curve.recompute_stats();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataFormatError(e.what(), 0);
  }
  data.config.lengths = data.curves[0][0].lengths;
  data.config.num_sequences = static_cast<int>(data.curves[0][0].samples.front().size());
  data.noise_label = "ingested";
  return data;
}

namespace {

nlohmann::json fit_to_json(const FitResult& fit) {
  return nlohmann::json{{"A", fit.A},
                        {"alpha", fit.alpha},
                        {"B", fit.B},
                        {"sigma_A", fit.sigma_A},
                        {"sigma_alpha", fit.sigma_alpha},
                        {"sigma_B", fit.sigma_B},
                        {"residual_rms", fit.residual_rms},
                        {"converged", fit.converged},
                        {"degenerate", fit.degenerate}};
}

}  // namespace

nlohmann::json fits_to_json(const SuiteResult& result) {
  nlohmann::json j;
  j["model"] = "P0 = A*alpha^N + B";
  for (const Protocol p : kProtocols) {
    for (const Qubit q : {Qubit::Control, Qubit::Ancilla}) {
      j["fits"][to_string(p)][to_string(q)] =
          fit_to_json(result.fits[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
    }
  }
  return j;
}

nlohmann::json suite_result_to_json(const SuiteResult& result, const Classification& cls) {
  nlohmann::json j;
  j["label"] = result.label;
  for (const Protocol p : kProtocols) {
    for (const Qubit q : {Qubit::Control, Qubit::Ancilla}) {
      const auto& eps =
          result.eps[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      const auto& fit =
          result.fits[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      j["eps"][to_string(p)][to_string(q)] = {{"value", eps.value}, {"sigma", eps.sigma}};
      j["fit_quality"][to_string(p)][to_string(q)] = fit.residual_rms;
    }
  }
  if (result.has_irb) {
    j["eps_irb"] = {{"value", result.eps_irb.value}, {"sigma", result.eps_irb.sigma}};
  }
  j["classification"]["thresholds"] = {{"abs_floor", cls.thresholds.abs_floor},
                                       {"z", cls.thresholds.z}};
  j["classification"]["signatures"] = nlohmann::json::array();
  for (const auto& verdict : cls.signatures) {
    j["classification"]["signatures"].push_back({{"signature", to_string(verdict.signature)},
                                                 {"evidence", verdict.evidence},
                                                 {"collision_hint", verdict.collision_hint}});
  }
  return j;
}

std::string classification_report(const SuiteResult& result, const Classification& cls) {
  std::ostringstream os;
  os << "mcm-rb suite report";
  if (!result.label.empty()) os << " (" << result.label << ")";
  os << "\n\n";
  os << "EPC/EPM estimates, eps = (1 - alpha)/2:\n";
  for (const Protocol p : kProtocols) {
    for (const Qubit q : {Qubit::Control, Qubit::Ancilla}) {
      const auto& eps = result.eps[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      const auto& fit = result.fits[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      os << "  " << to_string(p) << " / " << to_string(q) << ": " << format_double(eps.value)
         << " +- " << format_double(eps.sigma) << "  (residual_rms "
         << format_double(fit.residual_rms) << (fit.degenerate ? ", degenerate" : "") << ")\n";
    }
  }
  if (result.has_irb) {
    os << "\nmeasurement-induced control error, IRB: " << format_double(result.eps_irb.value)
       << " +- " << format_double(result.eps_irb.sigma) << "\n";
  }
  os << "\nerror signatures (abs_floor " << cls.thresholds.abs_floor << ", z "
     << cls.thresholds.z << "):\n";
  if (cls.signatures.empty()) {
    os << "  none matched\n";
  } else {
    for (const auto& verdict : cls.signatures) {
      os << "  " << to_string(verdict.signature) << "\n    " << verdict.evidence << "\n";
      if (verdict.collision_hint) os << "    hint: likely a measurement-induced collision\n";
    }
  }
  return os.str();
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << j.dump(2) << "\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << text;
}

void write_ptm_csv(const std::filesystem::path& path, const PauliTransferMatrix& ptm) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const auto labels = pauli_labels(ptm.n_qubits);
  os << "basis";
  for (const auto& label : labels) os << ',' << label;
  os << "\n";
  for (Eigen::Index i = 0; i < ptm.matrix.rows(); ++i) {
    os << labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < ptm.matrix.cols(); ++j) {
      os << ',' << format_double(ptm.matrix(i, j));
    }
    os << "\n";
  }
}

void write_choi_csv(const std::filesystem::path& path, const ChoiState& choi) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const int d2 = static_cast<int>(choi.matrix.rows());
  os << "row";
  for (int j = 0; j < d2; ++j) os << ",c" << j;
  os << "\n";
  for (int i = 0; i < d2; ++i) {
    os << 'r' << i;
    for (int j = 0; j < d2; ++j) os << ',' << format_double(choi.matrix(i, j).real());
    os << "\n";
  }
}

}  // namespace mcmrb
