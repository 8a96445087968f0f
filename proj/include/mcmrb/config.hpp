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

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcmrb/noise.hpp"
#include "mcmrb/protocols.hpp"

namespace mcmrb {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& what, int line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

struct SweepSpec {
  std::string parameter;       // eta | phi | p_m | delta | coupling | nu | ancilla_t1
  std::vector<double> values;  // already converted to internal units
};

/// A parsed run configuration: flat key = value lines under [suite], [noise],
/// and optional [sweep] sections. Dimensioned values carry explicit unit
/// suffixes (0.71us, 50kHz, 0.03pi); bare numbers are rejected for them.
struct RunConfig {
  SuiteConfig suite;
  Scenario scenario = Scenario::None;
  ScenarioParams params;
  std::optional<SweepSpec> sweep;
};

RunConfig parse_run_config_text(std::string_view text);
RunConfig parse_run_config(const std::filesystem::path& path);

/// Assigns a named scenario parameter (sweep plumbing). Returns false for
/// unknown names.
bool set_scenario_param(ScenarioParams& params, std::string_view name, double value);

/// Time in microseconds from a value like "0.71us", "35ns", "1ms".
double parse_duration_us(std::string_view token, int line);

/// Angular frequency in rad/us from "50kHz", "0.45MHz" (ordinary frequencies,
/// converted with the 2*pi factor) or "2.8rad/us".
double parse_angular_frequency(std::string_view token, int line);

/// Angle in radians from "0.05rad" or "0.03pi".
double parse_angle_rad(std::string_view token, int line);

}  // namespace mcmrb
