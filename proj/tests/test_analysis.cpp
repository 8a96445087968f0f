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

#include "mcmrb/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include <doctest.h>

using namespace mcmrb;

namespace {

const std::vector<int> kDefaultLengths = {1, 2, 4, 6, 8, 12, 16, 24, 32, 48, 64, 90, 110, 130, 150};

DecayCurve curve_from_model(double a, double alpha, double b,
                            const std::vector<int>& lengths = kDefaultLengths) {
  DecayCurve curve;
  curve.lengths = lengths;
  for (const int n : lengths) {
    curve.samples.push_back({a * std::pow(alpha, n) + b});
  }
  curve.recompute_stats();
  return curve;
}

SuiteResult result_with(double rb_c, double del_c, double rep_c, double rb_a, double del_a,
                        double rep_a, double sigma = 1e-5) {
  SuiteResult r;
  const auto set = [&](Protocol p, int q, double value) {
    r.eps[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = {value, sigma};
  };
  set(Protocol::McmRb, 0, rb_a);
  set(Protocol::McmRb, 1, rb_c);
  set(Protocol::DelayRb, 0, del_a);
  set(Protocol::DelayRb, 1, del_c);
  set(Protocol::McmRep, 0, rep_a);
  set(Protocol::McmRep, 1, rep_c);
  r.has_irb = true;
  return r;
}

bool has_signature(const Classification& cls, ErrorSignature sig) {
  for (const auto& verdict : cls.signatures) {
    if (verdict.signature == sig) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("exact exponential curves are recovered to 1e-6") {
  const FitResult fit = fit_exponential(curve_from_model(0.5, 0.99, 0.5));
  CHECK(fit.A == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fit.alpha == doctest::Approx(0.99).epsilon(1e-6));
  CHECK(fit.B == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(fit.residual_rms < 1e-9);
  CHECK(fit.converged);
  CHECK_FALSE(fit.degenerate);
}

TEST_CASE("recovery holds across a parameter grid") {
  for (const double alpha : {0.8, 0.95, 0.999}) {
    for (const double b : {0.3, 0.5, 0.7}) {
      const double a = 1.0 - b;
      const FitResult fit = fit_exponential(curve_from_model(a, alpha, b));
      CHECK(fit.alpha == doctest::Approx(alpha).epsilon(1e-6));
      CHECK(fit.A == doctest::Approx(a).epsilon(1e-5));
      CHECK(fit.B == doctest::Approx(b).epsilon(1e-5));
    }
  }
}

TEST_CASE("constant curves are flagged degenerate with tiny residuals") {
  const FitResult fit = fit_exponential(curve_from_model(0.0, 0.9, 1.0));
  CHECK(fit.degenerate);
  CHECK(fit.residual_rms < 1e-10);
  CHECK((std::abs(fit.A) < 1e-6 || fit.alpha > 1.0 - 1e-9));
  CHECK(fit.B == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("weighted fits honor per-length scatter") {
  DecayCurve curve = curve_from_model(0.5, 0.97, 0.5);
  // Corrupt one point but give it a huge scatter; the fit should ignore it.
  curve.samples[3] = {curve.mean[3] + 0.2, curve.mean[3] - 0.2};
  for (std::size_t i = 0; i < curve.lengths.size(); ++i) {
    if (i != 3) {
      const double v = curve.samples[i][0];
      curve.samples[i] = {v + 1e-6, v - 1e-6};
    }
  }
  curve.recompute_stats();
  const FitResult fit = fit_exponential(curve);
  CHECK(fit.alpha == doctest::Approx(0.97).epsilon(1e-3));
}

TEST_CASE("fit rejects curves with fewer than four distinct lengths") {
  DecayCurve curve = curve_from_model(0.5, 0.9, 0.5, {1, 2, 4});
  CHECK_THROWS_AS(fit_exponential(curve), std::invalid_argument);
}

TEST_CASE("a curve sampled from the flip model fits to EPM = p") {
  const double p = 0.01;
  DecayCurve curve;
  curve.lengths = kDefaultLengths;
  for (const int n : curve.lengths) {
    curve.samples.push_back({pgs_closed_form(p, n)});
  }
  curve.recompute_stats();
  const FitResult fit = fit_exponential(curve);
  CHECK(epc_from_alpha(fit.alpha) == doctest::Approx(p).epsilon(0.05));
}

TEST_CASE("epc_from_alpha is the linear map and is monotone") {
  CHECK(epc_from_alpha(1.0) == 0.0);
  CHECK(epc_from_alpha(0.0) == 0.5);
  CHECK(epc_from_alpha(0.98) == doctest::Approx(0.01).epsilon(1e-12));
  double previous = epc_from_alpha(0.0);
  for (double alpha = 0.05; alpha <= 1.0; alpha += 0.05) {
    const double current = epc_from_alpha(alpha);
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("irb_estimate matches hand arithmetic and propagates errors") {
  CHECK(irb_estimate(0.99, 0.0, 0.99, 0.0).value == doctest::Approx(0.0));
  CHECK(irb_estimate(0.98, 0.0, 0.99, 0.0).value == doctest::Approx(0.00505050505).epsilon(1e-8));

  const ValueWithSigma est = irb_estimate(0.98, 1e-3, 0.99, 2e-3);
  const double expected_sigma =
      0.5 * std::sqrt((1e-3 * 1e-3 + (0.98 / 0.99) * (0.98 / 0.99) * 2e-3 * 2e-3) /
                      (0.99 * 0.99));
  CHECK(est.sigma == doctest::Approx(expected_sigma).epsilon(1e-12));

  CHECK_THROWS_AS(irb_estimate(0.9, 0.0, 0.0, 0.0), std::domain_error);
}

TEST_CASE("pgs hand values") {
  CHECK(pgs_closed_form(0.0, 0) == 1.0);
  CHECK(pgs_closed_form(0.0, 117) == 1.0);
  CHECK(pgs_closed_form(0.1, 2) == doctest::Approx(0.82).epsilon(1e-14));
  CHECK(pgs_brute_force(0.1, 2) == doctest::Approx(0.82).epsilon(1e-14));
  // One flip impossible to cancel: N=1 leaves 1-p.
  for (const double p : {0.0, 0.2, 0.5, 0.9}) {
    CHECK(pgs_brute_force(p, 1) == doctest::Approx(1.0 - p).epsilon(1e-14));
  }
  CHECK(pgs_brute_force(0.1, 3) == doctest::Approx(0.756).epsilon(1e-14));
  for (const int n : {1, 2, 7, 50}) {
    CHECK(pgs_closed_form(0.5, n) == doctest::Approx(0.5).epsilon(1e-14));
  }
  CHECK(pgs_closed_form(0.5, 0) == 1.0);
  CHECK_THROWS_AS(pgs_closed_form(-0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(pgs_brute_force(0.1, -1), std::invalid_argument);
}

TEST_CASE("closed form and brute force agree over the grid") {
  for (const double p : {0.001, 0.01, 0.05, 0.1, 0.25, 0.49, 0.5, 0.75, 1.0}) {
    for (int n = 0; n <= 150; ++n) {
      CHECK(std::abs(pgs_closed_form(p, n) - pgs_brute_force(p, n)) < 1e-12);
    }
  }
}

TEST_CASE("small flip probabilities give near-exponential decay curves") {
  // The decaying part is exactly geometric; the curve deviates from a pure
  // A*x^N + B model by nothing, and from the naive (1-p)^N envelope by little.
  for (const double p : {0.005, 0.01, 0.02}) {
    for (int n = 0; n <= 150; ++n) {
      const double exact = pgs_closed_form(p, n);
      const double model = 0.5 + 0.5 * std::pow(1.0 - 2.0 * p, n);
      CHECK(std::abs(exact - model) < 1e-14);
    }
  }
}

TEST_CASE("classifier reproduces the signature table rows") {
  const ClassifierThresholds th;

  SUBCASE("baseline control decay only") {
    const Classification cls =
        classify_signature(result_with(5e-3, 5e-3, 1e-5, 1e-5, 1e-5, 1e-5), th);
    CHECK(has_signature(cls, ErrorSignature::NoMeasurementInducedError));
    CHECK(cls.signatures.size() == 1);
  }

  SUBCASE("non-QND ancilla decay") {
    const Classification cls =
        classify_signature(result_with(5e-3, 5e-3, 1e-5, 1e-2, 1e-5, 1e-2), th);
    CHECK(has_signature(cls, ErrorSignature::NonQndMeasurement));
    CHECK_FALSE(has_signature(cls, ErrorSignature::NoMeasurementInducedError));
  }

  SUBCASE("control-only measurement error") {
    const Classification cls =
        classify_signature(result_with(8e-3, 2e-3, 1e-5, 1e-5, 1e-5, 1e-5), th);
    CHECK(has_signature(cls, ErrorSignature::MeasurementInducedControlError));
    CHECK_FALSE(has_signature(cls, ErrorSignature::MeasurementInducedTwoQubitError));
  }

  SUBCASE("two-qubit error with the collision hint") {
    const Classification cls =
        classify_signature(result_with(9e-3, 2e-3, 1e-5, 4e-3, 1e-5, 1e-5), th);
    REQUIRE(has_signature(cls, ErrorSignature::MeasurementInducedTwoQubitError));
    for (const auto& verdict : cls.signatures) {
      if (verdict.signature == ErrorSignature::MeasurementInducedTwoQubitError) {
        CHECK(verdict.collision_hint);
        CHECK(!verdict.evidence.empty());
      }
    }
  }

  SUBCASE("rb cross-talk") {
    const Classification cls =
        classify_signature(result_with(5e-3, 5e-3, 1e-5, 6e-3, 6e-3, 1e-5), th);
    CHECK(has_signature(cls, ErrorSignature::RbCrossTalk));
  }

  SUBCASE("out-of-range estimates are rejected") {
    CHECK_THROWS_AS(classify_signature(result_with(0.7, 0.0, 0.0, 0.0, 0.0, 0.0), th),
                    std::invalid_argument);
  }
}

TEST_CASE("shrinking every sigma never removes a separation verdict") {
  const SuiteResult base = result_with(9e-3, 2e-3, 1e-5, 4e-3, 1e-5, 1e-5, 1e-3);
  const Classification before = classify_signature(base);
  REQUIRE(has_signature(before, ErrorSignature::MeasurementInducedTwoQubitError));
  for (const double scale : {0.5, 0.1, 0.01}) {
    SuiteResult scaled = base;
    for (auto& row : scaled.eps) {
      for (auto& e : row) e.sigma *= scale;
    }
    CHECK(has_signature(classify_signature(scaled),
                        ErrorSignature::MeasurementInducedTwoQubitError));
  }
}

TEST_CASE("verdicts tolerate perturbations well below the threshold") {
  const std::vector<SuiteResult> cases = {
      result_with(5e-3, 5e-3, 1e-5, 1e-5, 1e-5, 1e-5),
      result_with(5e-3, 5e-3, 1e-5, 1e-2, 1e-5, 1e-2),
      result_with(8e-3, 2e-3, 1e-5, 1e-5, 1e-5, 1e-5),
      result_with(9e-3, 2e-3, 1e-5, 4e-3, 1e-5, 1e-5),
  };
  const ClassifierThresholds th;
  for (const auto& base : cases) {
    const Classification reference = classify_signature(base, th);
    for (int combo = 0; combo < 64; ++combo) {
      SuiteResult shifted = base;
      int bit = 0;
      for (auto& row : shifted.eps) {
        for (auto& e : row) {
          e.value += ((combo >> bit) & 1 ? 1.0 : -1.0) * 0.09 * th.abs_floor;
          ++bit;
        }
      }
      const Classification perturbed = classify_signature(shifted, th);
      REQUIRE(perturbed.signatures.size() == reference.signatures.size());
      for (std::size_t i = 0; i < reference.signatures.size(); ++i) {
        CHECK(perturbed.signatures[i].signature == reference.signatures[i].signature);
      }
    }
  }
}
