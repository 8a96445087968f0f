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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace mcmrb {
namespace {

constexpr int kAncilla = 0;
constexpr int kControl = 1;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double model_eval(double a, double alpha, double b, double n) {
  return a * std::pow(alpha, n) + b;
}

struct FitProblem {
  std::vector<double> n;  // sequence lengths as doubles
  std::vector<double> y;  // mean probabilities
  std::vector<double> w;  // least-squares weights

  double cost(const Eigen::Vector3d& p) const {
    double c = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const double r = model_eval(p(0), p(1), p(2), n[i]) - y[i];
      c += w[i] * r * r;
    }
    return c;
  }

  void jacobian(const Eigen::Vector3d& p, Eigen::MatrixXd& jac, Eigen::VectorXd& res) const {
    const auto m = static_cast<Eigen::Index>(n.size());
    jac.resize(m, 3);
    res.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const double sw = std::sqrt(w[static_cast<std::size_t>(i)]);
      const double ni = n[static_cast<std::size_t>(i)];
      const double pow_n = std::pow(p(1), ni);
      const double pow_n1 = ni > 0 ? std::pow(p(1), ni - 1.0) : 0.0;
      jac(i, 0) = sw * pow_n;
      jac(i, 1) = sw * p(0) * ni * pow_n1;
      jac(i, 2) = sw;
      res(i) = sw * (model_eval(p(0), p(1), p(2), ni) - y[static_cast<std::size_t>(i)]);
    }
  }
};

Eigen::Vector3d clamp_params(Eigen::Vector3d p) {
  p(1) = clamp01(p(1));
  p(2) = clamp01(p(2));
  return p;
}

// Levenberg-Marquardt with box projection on alpha and B.
struct LmOutcome {
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
  double cost = std::numeric_limits<double>::infinity();
  bool converged = false;
};

LmOutcome levenberg_marquardt(const FitProblem& prob, Eigen::Vector3d p0) {
  LmOutcome out;
  Eigen::Vector3d p = clamp_params(p0);
  double cost = prob.cost(p);
  double lambda = 1e-3;
  Eigen::MatrixXd jac;
  Eigen::VectorXd res;

  for (int iter = 0; iter < 200; ++iter) {
    prob.jacobian(p, jac, res);
    const Eigen::Matrix3d jtj = jac.transpose() * jac;
    const Eigen::Vector3d jtr = jac.transpose() * res;

    bool stepped = false;
    for (int attempt = 0; attempt < 25; ++attempt) {
      Eigen::Matrix3d damped = jtj;
      for (int k = 0; k < 3; ++k) {
        damped(k, k) += lambda * std::max(jtj(k, k), 1e-12);
      }
      const Eigen::Vector3d step = damped.ldlt().solve(-jtr);
      const Eigen::Vector3d candidate = clamp_params(p + step);
      const double candidate_cost = prob.cost(candidate);
      if (candidate_cost < cost) {
        const double improvement = cost - candidate_cost;
        p = candidate;
        cost = candidate_cost;
        lambda = std::max(lambda / 3.0, 1e-12);
        stepped = true;
        if (improvement <= 1e-15 * (cost + 1e-30) || step.cwiseAbs().maxCoeff() < 1e-13) {
          out.converged = true;
        }
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e14) break;
    }
    if (!stepped) {
      out.converged = out.converged || jtr.cwiseAbs().maxCoeff() < 1e-10;
      break;
    }
    if (out.converged) break;
  }
  out.p = p;
  out.cost = cost;
  return out;
}

// Log-linear regression of max(y - b0, eps) against N for a decay-rate guess.
double alpha_guess(const FitProblem& prob, double a0, double b0) {
  std::vector<double> xs;
  std::vector<double> ys;
  const double floor = std::max(1e-12, 1e-3 * std::abs(a0));
  for (std::size_t i = 0; i < prob.n.size(); ++i) {
    const double excess = (a0 >= 0 ? prob.y[i] - b0 : b0 - prob.y[i]);
    if (excess > floor) {
      xs.push_back(prob.n[i]);
      ys.push_back(std::log(excess));
    }
  }
  if (xs.size() < 2) return 0.99;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0.0) return 0.99;
  return std::clamp(std::exp(sxy / sxx), 1e-4, 1.0);
}

double unweighted_rms(const FitProblem& prob, const Eigen::Vector3d& p) {
  double ss = 0.0;
  for (std::size_t i = 0; i < prob.n.size(); ++i) {
    const double r = model_eval(p(0), p(1), p(2), prob.n[i]) - prob.y[i];
    ss += r * r;
  }
  return std::sqrt(ss / static_cast<double>(prob.n.size()));
}

}  // namespace

const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::McmRb:
      return "mcm-rb";
    case Protocol::DelayRb:
      return "delay-rb";
    case Protocol::McmRep:
      return "mcm-rep";
  }
  return "mcm-rb";
}

void DecayCurve::recompute_stats() {
  mean.assign(lengths.size(), 0.0);
  stddev.assign(lengths.size(), 0.0);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const auto& vals = samples.at(i);
    if (vals.empty()) continue;
    const double m =
        std::accumulate(vals.begin(), vals.end(), 0.0) / static_cast<double>(vals.size());
    mean[i] = m;
    if (vals.size() > 1) {
      double ss = 0.0;
      for (const double v : vals) ss += (v - m) * (v - m);
      stddev[i] = std::sqrt(ss / static_cast<double>(vals.size() - 1));
    }
  }
}

FitResult fit_exponential(const DecayCurve& curve) {
  const std::set<int> distinct(curve.lengths.begin(), curve.lengths.end());
  if (distinct.size() < 4) {
    throw std::invalid_argument("fit_exponential: need at least 4 distinct sequence lengths");
  }
  if (curve.mean.size() != curve.lengths.size() || curve.stddev.size() != curve.lengths.size()) {
    throw std::invalid_argument("fit_exponential: curve statistics not populated");
  }

  FitProblem prob;
  prob.n.assign(curve.lengths.begin(), curve.lengths.end());
  prob.y = curve.mean;
  prob.w.assign(prob.n.size(), 1.0);
  const double max_std = *std::max_element(curve.stddev.begin(), curve.stddev.end());
  if (max_std > 1e-12) {
    // Floor tiny scatters so a single near-exact point cannot dominate.
    const double floor = std::max(1e-9, 1e-3 * max_std);
    for (std::size_t i = 0; i < prob.w.size(); ++i) {
      const double s = std::max(curve.stddev[i], floor);
      prob.w[i] = 1.0 / (s * s);
    }
  }

  FitResult fit;

  const auto [ymin_it, ymax_it] = std::minmax_element(prob.y.begin(), prob.y.end());
  if (*ymax_it - *ymin_it < 1e-12) {
    // Flat curve: alpha is unidentifiable, report the A = 0 representative.
    fit.A = 0.0;
    fit.alpha = 1.0;
    fit.B = clamp01(prob.y.front());
    fit.converged = true;
    fit.degenerate = true;
    fit.residual_rms = unweighted_rms(prob, Eigen::Vector3d(0.0, 1.0, fit.B));
    return fit;
  }

  const double tail =
      0.5 * (prob.y[prob.y.size() - 1] + prob.y[prob.y.size() - 2]);
  std::vector<Eigen::Vector3d> starts;
  {
    const double b0 = clamp01(tail);
    const double a0 = prob.y.front() - b0;
    starts.emplace_back(a0, alpha_guess(prob, a0, b0), b0);
    starts.emplace_back(a0, 0.9, b0);
  }
  starts.emplace_back(prob.y.front() - 0.5, 0.99, 0.5);
  {
    const double b0 = clamp01(*ymin_it);
    starts.emplace_back(prob.y.front() - b0, 0.999, b0);
  }

  LmOutcome best;
  for (const auto& start : starts) {
    const LmOutcome run = levenberg_marquardt(prob, start);
    if (run.cost < best.cost) best = run;
  }

  fit.A = best.p(0);
  fit.alpha = best.p(1);
  fit.B = best.p(2);
  fit.converged = best.converged;
  fit.residual_rms = unweighted_rms(prob, best.p);
  fit.degenerate = std::abs(fit.A) < 1e-8 || fit.alpha > 1.0 - 1e-12;

  // Standard errors from the local quadratic model, scaled by the reduced
  // chi-square so they stay meaningful for unit weights.
  Eigen::MatrixXd jac;
  Eigen::VectorXd res;
  prob.jacobian(best.p, jac, res);
  const Eigen::Matrix3d jtj = jac.transpose() * jac;
  const double dof = static_cast<double>(prob.n.size()) - 3.0;
  if (dof > 0) {
    const double scale = best.cost / dof;
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(jtj, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(1e-12);
    const Eigen::Matrix3d cov = svd.solve(Eigen::Matrix3d::Identity()) * scale;
    fit.sigma_A = std::sqrt(std::max(cov(0, 0), 0.0));
    fit.sigma_alpha = std::sqrt(std::max(cov(1, 1), 0.0));
    fit.sigma_B = std::sqrt(std::max(cov(2, 2), 0.0));
  }
  return fit;
}

double epc_from_alpha(double alpha) { return 0.5 * (1.0 - alpha); }

ValueWithSigma irb_estimate(double alpha_rb, double sigma_rb, double alpha_del, double sigma_del) {
  if (alpha_del <= 1e-9) {
    throw std::domain_error("irb_estimate: reference decay is unresolvable");
  }
  const double ratio = alpha_rb / alpha_del;
  const double eps = 0.5 * (1.0 - ratio);
  const double var = (sigma_rb * sigma_rb + ratio * ratio * sigma_del * sigma_del) /
                     (alpha_del * alpha_del);
  return ValueWithSigma{eps, 0.5 * std::sqrt(var)};
}

double pgs_closed_form(double p, int n) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("pgs: p out of [0, 1]");
  if (n < 0) throw std::invalid_argument("pgs: negative length");
  // Even-flip probability; (1-2p)^0 = 1 covers N = 0.
  return 0.5 * (1.0 + std::pow(1.0 - 2.0 * p, static_cast<double>(n)));
}

double pgs_brute_force(double p, int n) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("pgs: p out of [0, 1]");
  if (n < 0) throw std::invalid_argument("pgs: negative length");
  const double q = 1.0 - p;
  if (q == 0.0) return n % 2 == 0 ? 1.0 : 0.0;
  double term = std::pow(q, n);  // k = 0
  double sum = term;
  for (int k = 1; 2 * k <= n; ++k) {
    // C(n, 2k) / C(n, 2k-2) = (n-2k+2)(n-2k+1) / ((2k-1) 2k)
    term *= (p * p) / (q * q);
    term *= static_cast<double>(n - 2 * k + 2) * static_cast<double>(n - 2 * k + 1) /
            (static_cast<double>(2 * k - 1) * static_cast<double>(2 * k));
    sum += term;
  }
  return sum;
}

SuiteResult analyze_curves(const std::array<std::array<DecayCurve, 2>, 3>& curves,
                           bool exact_mode) {
  SuiteResult result;
  // Exact-mode fits can be numerically perfect; floor the rate uncertainty at
  // the per-step scale of the residuals so z-tests never divide by zero.
  const int max_length = std::max(1, curves[0][0].lengths.empty() ? 1
                                                                  : curves[0][0].lengths.back());
  const auto rate_floor = [&](const FitResult& fit) {
    return exact_mode ? fit.residual_rms / static_cast<double>(max_length) : 0.0;
  };
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 2; ++q) {
      const FitResult fit = fit_exponential(curves[static_cast<std::size_t>(p)]
                                                  [static_cast<std::size_t>(q)]);
      result.fits[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = fit;
      ValueWithSigma eps{epc_from_alpha(fit.alpha), 0.5 * fit.sigma_alpha};
      eps.sigma = std::max({eps.sigma, rate_floor(fit), 1e-12});
      result.eps[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = eps;
    }
  }
  const FitResult& rb = result.fits[0][kControl];
  const FitResult& del = result.fits[1][kControl];
  if (del.alpha > 1e-9) {
    result.eps_irb = irb_estimate(rb.alpha, rb.sigma_alpha, del.alpha, del.sigma_alpha);
    result.eps_irb.sigma =
        std::max({result.eps_irb.sigma, rate_floor(rb), rate_floor(del), 1e-12});
    result.has_irb = true;
  }
  return result;
}

const char* to_string(ErrorSignature s) {
  switch (s) {
    case ErrorSignature::NoMeasurementInducedError:
      return "NoMeasurementInducedError";
    case ErrorSignature::NonQndMeasurement:
      return "NonQndMeasurement";
    case ErrorSignature::MeasurementInducedControlError:
      return "MeasurementInducedControlError";
    case ErrorSignature::MeasurementInducedTwoQubitError:
      return "MeasurementInducedTwoQubitError";
    case ErrorSignature::RbCrossTalk:
      return "RbCrossTalk";
  }
  return "NoMeasurementInducedError";
}

namespace {

struct Predicates {
  const SuiteResult& r;
  const ClassifierThresholds& th;

  const ValueWithSigma& eps(Protocol p, int qubit) const {
    return r.eps[static_cast<std::size_t>(p)][static_cast<std::size_t>(qubit)];
  }

  double zero_threshold(const ValueWithSigma& e) const {
    return std::max(th.abs_floor, th.z * e.sigma);
  }

  bool is_zero(const ValueWithSigma& e) const { return e.value < zero_threshold(e); }

  bool is_positive(const ValueWithSigma& e) const { return !is_zero(e); }

  double pair_threshold(const ValueWithSigma& a, const ValueWithSigma& b) const {
    return std::max(th.abs_floor, th.z * std::hypot(a.sigma, b.sigma));
  }

  bool approx_equal(const ValueWithSigma& a, const ValueWithSigma& b) const {
    return std::abs(a.value - b.value) <= pair_threshold(a, b);
  }

  bool greater(const ValueWithSigma& a, const ValueWithSigma& b) const {
    return a.value - b.value > pair_threshold(a, b);
  }
};

std::string fmt_eps(const char* name, const ValueWithSigma& e) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << name << "=" << e.value << "±" << e.sigma;
  return os.str();
}

}  // namespace

Classification classify_signature(const SuiteResult& result, const ClassifierThresholds& th) {
  for (const auto& row : result.eps) {
    for (const auto& e : row) {
      if (!(e.value >= -0.05 && e.value <= 0.55)) {
        throw std::invalid_argument("classify_signature: EPC/M outside plausible range");
      }
    }
  }

  const Predicates pr{result, th};
  const auto& rb_a = pr.eps(Protocol::McmRb, kAncilla);
  const auto& del_a = pr.eps(Protocol::DelayRb, kAncilla);
  const auto& rep_a = pr.eps(Protocol::McmRep, kAncilla);
  const auto& rb_c = pr.eps(Protocol::McmRb, kControl);
  const auto& del_c = pr.eps(Protocol::DelayRb, kControl);
  const auto& rep_c = pr.eps(Protocol::McmRep, kControl);

  const bool ancilla_all_zero = pr.is_zero(rb_a) && pr.is_zero(del_a) && pr.is_zero(rep_a);
  const bool control_baseline = pr.approx_equal(rb_c, del_c) && pr.is_zero(rep_c);
  const bool control_enhanced = pr.greater(rb_c, del_c);

  Classification out;
  out.thresholds = th;
  const auto add = [&](ErrorSignature sig, std::string evidence, bool hint = false) {
    out.signatures.push_back(SignatureVerdict{sig, std::move(evidence), hint});
  };

  std::ostringstream base;
  base << fmt_eps("eps_rb^c", rb_c) << ", " << fmt_eps("eps_del^c", del_c) << ", "
       << fmt_eps("eps_rep^c", rep_c) << "; " << fmt_eps("eps_rb^a", rb_a) << ", "
       << fmt_eps("eps_del^a", del_a) << ", " << fmt_eps("eps_rep^a", rep_a);

  if (ancilla_all_zero && control_baseline) {
    add(ErrorSignature::NoMeasurementInducedError,
        "all ancilla EPM ~ 0; eps_rb^c ~ eps_del^c; eps_rep^c ~ 0 [" + base.str() + "]");
  }
  if (pr.is_zero(del_a) && pr.is_positive(rb_a) && pr.is_positive(rep_a) && control_baseline) {
    add(ErrorSignature::NonQndMeasurement,
        "eps_rb^a > 0 and eps_rep^a > 0 with eps_del^a ~ 0; control unaffected [" + base.str() +
            "]");
  }
  if (ancilla_all_zero && control_enhanced) {
    add(ErrorSignature::MeasurementInducedControlError,
        "eps_rb^c > eps_del^c with all ancilla EPM ~ 0 [" + base.str() + "]");
  }
  if (control_enhanced && pr.is_zero(del_a) &&
      (pr.is_positive(rb_a) || pr.is_positive(rep_a))) {
    const bool hint =
        pr.is_positive(rb_a) && (pr.is_zero(rep_a) || rb_a.value > 10.0 * rep_a.value);
    std::string evidence =
        "eps_rb^c > eps_del^c with ancilla decay under mcm-rb [" + base.str() + "]";
    if (hint) {
      evidence += "; eps_rb^a >> eps_rep^a suggests a measurement-induced collision";
    }
    add(ErrorSignature::MeasurementInducedTwoQubitError, std::move(evidence), hint);
  }
  if (pr.is_zero(rep_a) && pr.is_positive(rb_a) && pr.is_positive(del_a) && control_baseline) {
    add(ErrorSignature::RbCrossTalk,
        "ancilla decays under both mcm-rb and delay-rb but not mcm-rep [" + base.str() + "]");
  }
  return out;
}

}  // namespace mcmrb
