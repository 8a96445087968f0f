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

#include <filesystem>

#include <doctest.h>

#include "mcmrb/config.hpp"

using namespace mcmrb;

namespace {

namespace fs = std::filesystem;

fs::path config_dir() { return fs::path{MCMRB_SOURCE_DIR} / "data" / "configs"; }

Classification classify_config(const std::string& name) {
  const RunConfig config = parse_run_config(config_dir() / name);
  const NoiseModel noise = build_noise_model(config.scenario, config.params);
  const SuiteData data = run_suite(config.suite, noise, 4);
  return classify_signature(analyze_suite(data));
}

}  // namespace

TEST_CASE("every bundled config parses") {
  for (const auto& entry : fs::directory_iterator(config_dir())) {
    if (entry.path().extension() != ".cfg") continue;
    CAPTURE(entry.path().filename().string());
    CHECK_NOTHROW(parse_run_config(entry.path()));
  }
}

TEST_CASE("bundled none config classifies as no measurement induced error") {
  const Classification cls = classify_config("none.cfg");
  REQUIRE(cls.signatures.size() == 1);
  CHECK(cls.signatures[0].signature == ErrorSignature::NoMeasurementInducedError);
}

TEST_CASE("bundled non-QND config classifies as non-QND measurement") {
  const Classification cls = classify_config("nonqnd_eta02.cfg");
  REQUIRE(cls.signatures.size() == 1);
  CHECK(cls.signatures[0].signature == ErrorSignature::NonQndMeasurement);
}

TEST_CASE("bundled collision config classifies as a hinted two-qubit error") {
  const Classification cls = classify_config("collision_d20.cfg");
  bool hinted = false;
  for (const auto& verdict : cls.signatures) {
    if (verdict.signature == ErrorSignature::MeasurementInducedTwoQubitError) {
      hinted = verdict.collision_hint;
    }
  }
  CHECK(hinted);
}

TEST_CASE("bundled stark config classifies as a control-only error") {
  const Classification cls = classify_config("stark_phi003pi.cfg");
  REQUIRE(cls.signatures.size() == 1);
  CHECK(cls.signatures[0].signature == ErrorSignature::MeasurementInducedControlError);
}
