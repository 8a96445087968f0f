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
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mcmrb/analysis.hpp"
#include "mcmrb/channel_metrics.hpp"
#include "mcmrb/protocols.hpp"

namespace mcmrb {

struct DataFormatError : std::runtime_error {
  DataFormatError(const std::string& what, int line_number)
      : std::runtime_error(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  int line;
};

/// Raw per-sequence decay data. Columns:
/// protocol,qubit,length,seq_index,probability — aggregates are derived on
/// read, never stored. Probabilities round-trip bit-exactly.
void write_curves_csv(std::ostream& os, const SuiteData& data);
void write_curves_csv(const std::filesystem::path& path, const SuiteData& data);
void write_curves_json(const std::filesystem::path& path, const SuiteData& data);

/// Throws DataFormatError with a line diagnostic on any schema violation.
SuiteData read_curves_csv(std::istream& is);
SuiteData read_curves_csv(const std::filesystem::path& path);
SuiteData read_curves_json(const std::filesystem::path& path);

nlohmann::json fits_to_json(const SuiteResult& result);
nlohmann::json suite_result_to_json(const SuiteResult& result, const Classification& cls);
std::string classification_report(const SuiteResult& result, const Classification& cls);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Real part, row-major, with a basis-label header row.
void write_ptm_csv(const std::filesystem::path& path, const PauliTransferMatrix& ptm);
void write_choi_csv(const std::filesystem::path& path, const ChoiState& choi);

/// Full-precision decimal form that parses back to the identical double.
std::string format_double(double value);

}  // namespace mcmrb
