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

#include "mcmrb/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace mcmrb {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

/// Splits "0.71us" into the numeric prefix and the suffix. The suffix may be
/// empty (bare number).
struct NumberToken {
  double value = 0.0;
  std::string_view suffix;
};

NumberToken parse_number(std::string_view token, int line) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr == token.data()) {
    throw ConfigError("expected a number, got '" + std::string(token) + "'", line);
  }
  return NumberToken{value, trim(token.substr(static_cast<std::size_t>(ptr - token.data())))};
}

double parse_bare(std::string_view token, int line) {
  const NumberToken t = parse_number(token, line);
  if (!t.suffix.empty()) {
    throw ConfigError("unexpected unit suffix '" + std::string(t.suffix) + "'", line);
  }
  return t.value;
}

std::uint64_t parse_seed(std::string_view token, int line) {
  token = trim(token);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ConfigError("expected a non-negative integer seed", line);
  }
  return value;
}

InitState parse_init(std::string_view token, int line) {
  token = trim(token);
  if (token == "ground") return InitState::Ground;
  if (token == "excited") return InitState::Excited;
  throw ConfigError("init state must be 'ground' or 'excited'", line);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t pos = value.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(value.substr(start)));
      break;
    }
    out.push_back(trim(value.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

enum class ParamKind { Probability, Duration, AngularFrequency, Angle };

struct ParamInfo {
  ParamKind kind;
  double ScenarioParams::* field;
};

const std::map<std::string, ParamInfo, std::less<>>& noise_params() {
  static const std::map<std::string, ParamInfo, std::less<>> kParams = {
      {"eta", {ParamKind::Probability, &ScenarioParams::eta}},
      {"phi", {ParamKind::Angle, &ScenarioParams::phi}},
      {"p_m", {ParamKind::Probability, &ScenarioParams::p_m}},
      {"delta", {ParamKind::AngularFrequency, &ScenarioParams::delta}},
      {"coupling", {ParamKind::AngularFrequency, &ScenarioParams::coupling}},
      {"nu", {ParamKind::AngularFrequency, &ScenarioParams::nu}},
      {"control_t1", {ParamKind::Duration, &ScenarioParams::control_t1}},
      {"control_t2", {ParamKind::Duration, &ScenarioParams::control_t2}},
      {"ancilla_t1", {ParamKind::Duration, &ScenarioParams::ancilla_t1}},
      {"gate_depol_eta", {ParamKind::Probability, &ScenarioParams::gate_depol_eta}},
  };
  return kParams;
}

double parse_param_value(ParamKind kind, std::string_view token, int line) {
  switch (kind) {
    case ParamKind::Probability:
      return parse_bare(token, line);
    case ParamKind::Duration:
      return parse_duration_us(token, line);
    case ParamKind::AngularFrequency:
      return parse_angular_frequency(token, line);
    case ParamKind::Angle:
      return parse_angle_rad(token, line);
  }
  return 0.0;
}

}  // namespace

double parse_duration_us(std::string_view token, int line) {
  const NumberToken t = parse_number(token, line);
  if (t.suffix == "us") return t.value;
  if (t.suffix == "ns") return t.value * 1e-3;
  if (t.suffix == "ms") return t.value * 1e3;
  if (t.suffix == "s") return t.value * 1e6;
  throw ConfigError("duration needs a unit suffix (us, ns, ms, s), got '" + std::string(token) +
                        "'",
                    line);
}

double parse_angular_frequency(std::string_view token, int line) {
  const NumberToken t = parse_number(token, line);
  // Ordinary frequencies convert to angular rad/us: 50 kHz -> 2*pi*0.05.
  if (t.suffix == "kHz") return 2.0 * std::numbers::pi * t.value * 1e-3;
  if (t.suffix == "MHz") return 2.0 * std::numbers::pi * t.value;
  if (t.suffix == "Hz") return 2.0 * std::numbers::pi * t.value * 1e-6;
  if (t.suffix == "rad/us") return t.value;
  throw ConfigError("frequency needs a unit suffix (kHz, MHz, Hz, rad/us), got '" +
                        std::string(token) + "'",
                    line);
}

double parse_angle_rad(std::string_view token, int line) {
  const NumberToken t = parse_number(token, line);
  if (t.suffix == "rad") return t.value;
  if (t.suffix == "pi") return t.value * std::numbers::pi;
  throw ConfigError("angle needs a unit suffix (rad, pi), got '" + std::string(token) + "'",
                    line);
}

RunConfig parse_run_config_text(std::string_view text) {
  RunConfig config;
  std::optional<std::string> sweep_parameter;
  std::vector<std::pair<std::string, int>> sweep_tokens;

  std::istringstream is{std::string(text)};
  std::string raw;
  std::string section;
  int line_number = 0;
  while (std::getline(is, raw)) {
    ++line_number;
    std::string_view line = trim(raw);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", line_number);
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "suite" && section != "noise" && section != "sweep") {
        throw ConfigError("unknown section [" + section + "]", line_number);
      }
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", line_number);
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("expected 'key = value'", line_number);
    }

    if (section == "suite") {
      if (key == "lengths") {
        config.suite.lengths.clear();
        for (const auto item : split_list(value)) {
          config.suite.lengths.push_back(static_cast<int>(parse_bare(item, line_number)));
        }
      } else if (key == "num_sequences") {
        config.suite.num_sequences = static_cast<int>(parse_bare(value, line_number));
      } else if (key == "shots") {
        config.suite.shots = static_cast<int>(parse_bare(value, line_number));
      } else if (key == "t_g") {
        config.suite.t_g = parse_duration_us(value, line_number);
      } else if (key == "t_m") {
        config.suite.t_m = parse_duration_us(value, line_number);
      } else if (key == "seed") {
        config.suite.seed = parse_seed(value, line_number);
      } else if (key == "ancilla_init") {
        config.suite.ancilla_init = parse_init(value, line_number);
      } else if (key == "control_init") {
        config.suite.control_init = parse_init(value, line_number);
      } else if (key == "max_length") {
        config.suite.max_length = static_cast<int>(parse_bare(value, line_number));
      } else {
        throw ConfigError("unknown [suite] key '" + key + "'", line_number);
      }
    } else if (section == "noise") {
      if (key == "scenario") {
        const auto scenario = scenario_from_string(trim(value));
        if (!scenario) {
          throw ConfigError("unknown scenario '" + std::string(value) + "'", line_number);
        }
        config.scenario = *scenario;
      } else if (const auto it = noise_params().find(key); it != noise_params().end()) {
        config.params.*(it->second.field) =
            parse_param_value(it->second.kind, value, line_number);
      } else {
        throw ConfigError("unknown [noise] key '" + key + "'", line_number);
      }
    } else if (section == "sweep") {
      if (key == "parameter") {
        sweep_parameter = std::string(trim(value));
      } else if (key == "values") {
        for (const auto item : split_list(value)) {
          sweep_tokens.emplace_back(std::string(item), line_number);
        }
      } else {
        throw ConfigError("unknown [sweep] key '" + key + "'", line_number);
      }
    } else {
      throw ConfigError("key outside any section", line_number);
    }
  }

  if (sweep_parameter || !sweep_tokens.empty()) {
    if (!sweep_parameter) throw ConfigError("[sweep] needs 'parameter'", line_number);
    if (sweep_tokens.empty()) throw ConfigError("[sweep] needs 'values'", line_number);
    const auto it = noise_params().find(*sweep_parameter);
    if (it == noise_params().end()) {
      throw ConfigError("unknown sweep parameter '" + *sweep_parameter + "'", line_number);
    }
    SweepSpec sweep;
    sweep.parameter = *sweep_parameter;
    for (const auto& [token, token_line] : sweep_tokens) {
      sweep.values.push_back(parse_param_value(it->second.kind, token, token_line));
    }
    config.sweep = std::move(sweep);
  }

  config.params.t_m = config.suite.t_m;  // single source for the window length
  validate_config(config.suite);
  return config;
}

RunConfig parse_run_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file " + path.string(), 0);
  std::ostringstream buffer;
  buffer << is.rdbuf();
  return parse_run_config_text(buffer.str());
}

bool set_scenario_param(ScenarioParams& params, std::string_view name, double value) {
  const auto it = noise_params().find(name);
  if (it == noise_params().end()) return false;
  params.*(it->second.field) = value;
  return true;
}

}  // namespace mcmrb
