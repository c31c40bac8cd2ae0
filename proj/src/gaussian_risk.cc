// Copyright 2026 The BAP Authors
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

#include "bap/gaussian_risk.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <utility>

#include "bap/bayes_risk.h"
#include "bap/histogram_regressor.h"
#include "bap/normal.h"
#include "bap/random_source.h"
#include "bap/status_macros.h"

namespace bap {
namespace {

// Conditioning events below this probability contribute nothing.
constexpr double kTinyProbability = 1e-300;

// Beyond this |u| the integrand min(Phi(u), 1 - Phi(u)) is below 1e-32.
constexpr double kProbitCut = 12.0;

double Clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// P(a < Z <= b), accurate in either tail.
double NormalInterval(double a, double b) {
  if (!(b > a)) return 0.0;
  if (a >= 0.0) return NormalSf(a) - NormalSf(b);
  return NormalCdf(b) - NormalCdf(a);
}

// Mean and standard error of per-sample risks.
class RiskAccumulator {
 public:
  void Add(double r) {
    sum_ += r;
    sum_sq_ += r * r;
    ++count_;
  }
  RiskEstimate Finish() const {
    RiskEstimate out;
    out.method = EvalMethod::kMonteCarlo;
    if (count_ == 0) return out;
    const double m = static_cast<double>(count_);
    out.value = sum_ / m;
    if (count_ > 1) {
      const double var =
          std::max(0.0, (sum_sq_ - m * out.value * out.value) / (m - 1.0));
      out.std_error = std::sqrt(var / m);
    }
    return out;
  }

 private:
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
  int64_t count_ = 0;
};

RiskEstimate Exact(double value) {
  return {value, 0.0, EvalMethod::kClosedForm};
}

RiskEstimate Quadrature(double value) {
  return {value, 0.0, EvalMethod::kQuadrature};
}

double Median(std::vector<double>& v) {
  const size_t n = v.size();
  const size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  const double upper = v[mid];
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace

std::string_view EvalMethodName(EvalMethod method) {
  switch (method) {
    case EvalMethod::kClosedForm:
      return "closed-form";
    case EvalMethod::kQuadrature:
      return "quadrature";
    case EvalMethod::kMonteCarlo:
      return "monte-carlo";
  }
  return "unknown";
}

PredictiveDraws GeneratePredictiveDraws(const GaussianModel& model,
                                        int64_t samples, uint64_t seed) {
  const int n = model.n;
  PredictiveDraws d;
  d.n = n;
  d.size = samples;
  d.theta.resize(samples);
  d.data.resize(samples * n);
  d.data_noise.resize(samples * n);
  d.median_noise.resize(samples);
  d.mean.resize(samples);
  d.max.resize(samples);
  d.median.resize(samples);
  RandomSource rng(seed, 0);
  std::vector<double> row(n);
  for (int64_t m = 0; m < samples; ++m) {
    const double theta = model.sigma0 * rng.Normal();
    d.theta[m] = theta;
    double sum = 0.0;
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double x = theta + rng.Normal();
      d.data[m * n + i] = x;
      row[i] = x;
      sum += x;
      hi = std::max(hi, x);
    }
    for (int i = 0; i < n; ++i) d.data_noise[m * n + i] = rng.Normal();
    d.median_noise[m] = rng.Normal();
    d.mean[m] = sum / n;
    d.max[m] = hi;
    d.median[m] = Median(row);
  }
  return d;
}

struct GaussianEvaluator::Shared {
  std::once_flag once;
  std::unique_ptr<PredictiveDraws> draws;
};

GaussianEvaluator::GaussianEvaluator(const GaussianModel& model,
                                     const NumericsConfig& cfg,
                                     GaussianIntegrator outer,
                                     QuadratureRule inner,
                                     QuadratureRule legendre)
    : model_(model),
      cfg_(cfg),
      outer_(std::move(outer)),
      inner_(std::move(inner)),
      legendre_(std::move(legendre)),
      shared_(std::make_shared<Shared>()) {}

absl::StatusOr<GaussianEvaluator> GaussianEvaluator::Create(
    const GaussianModel& model, const NumericsConfig& cfg) {
  RETURN_IF_ERROR(model.Validate());
  RETURN_IF_ERROR(cfg.Validate());
  ASSIGN_OR_RETURN(GaussianIntegrator outer,
                   GaussianIntegrator::Create(cfg.quad_order));
  ASSIGN_OR_RETURN(QuadratureRule inner, GaussHermite(cfg.inner_quad_order));
  ASSIGN_OR_RETURN(QuadratureRule legendre, GaussLegendre(cfg.quad_order));
  return GaussianEvaluator(model, cfg, std::move(outer), std::move(inner),
                           std::move(legendre));
}

const PredictiveDraws& GaussianEvaluator::draws() const {
  std::call_once(shared_->once, [this] {
    shared_->draws = std::make_unique<PredictiveDraws>(
        GeneratePredictiveDraws(model_, cfg_.mc_samples, cfg_.seed));
  });
  return *shared_->draws;
}

double GaussianEvaluator::ExpectProbitRisk(double alpha, double beta) const {
  beta = std::abs(beta);
  if (beta == 0.0) return NormalCdf(-std::abs(alpha));
  // Integrate over u = alpha + beta z, split at the kink u = 0.
  const double span = GaussianIntegrator::kTailCut * beta;
  const double lo = std::max(alpha - span, -kProbitCut);
  const double hi = std::min(alpha + span, kProbitCut);
  auto piece = [&](double a, double b) {
    if (!(b > a)) return 0.0;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    return 2.0 * half * legendre_.Expect([&](double t) {
      const double u = mid + half * t;
      return NormalCdf(-std::abs(u)) * NormalPdf((u - alpha) / beta) / beta;
    });
  };
  return piece(lo, std::min(0.0, hi)) + piece(std::max(0.0, lo), hi);
}

absl::StatusOr<RiskEstimate> GaussianEvaluator::RiskBob(
    const GaussianMechanism& mech, AdversaryTarget target) const {
  RETURN_IF_ERROR(mech.Validate());
  const double n = model_.n;
  const double s0sq = model_.sigma0 * model_.sigma0;
  const double sigma = mech.parameter;
  switch (mech.kind) {
    case MechanismKind::kNull:
      return Exact(ZeroOneRisk(NormalSf(model_.c_b / model_.sigma0)));
    case MechanismKind::kFull:
    case MechanismKind::kNoisyFull: {
      const double s = mech.kind == MechanismKind::kFull ? 0.0 : sigma;
      const PosteriorParams pp = ComputePosteriorParams(model_, s);
      const double v_ybar = s0sq + (1.0 + s * s) / n;
      const double sd = std::sqrt(pp.v_full);
      const double beta = pp.v_full * n / (1.0 + s * s) * std::sqrt(v_ybar) / sd;
      return Quadrature(ExpectProbitRisk(-model_.c_b / sd, beta));
    }
    case MechanismKind::kNoisyMean: {
      const PosteriorParams pp = ComputePosteriorParams(model_, sigma);
      const double sd = std::sqrt(pp.v_mean);
      const double beta =
          pp.v_mean / pp.v_eta * std::sqrt(s0sq + pp.v_eta) / sd;
      return Quadrature(ExpectProbitRisk(-model_.c_b / sd, beta));
    }
    case MechanismKind::kNoisyMedian:
      return NoisyMedian(sigma, /*bob=*/true, target);
    case MechanismKind::kOneBit:
      return OneBitBob(mech.parameter);
  }
  return absl::InvalidArgumentError("unknown mechanism");
}

absl::StatusOr<RiskEstimate> GaussianEvaluator::RiskEve(
    const GaussianMechanism& mech, AdversaryTarget target) const {
  RETURN_IF_ERROR(mech.Validate());
  const bool max = target == AdversaryTarget::kMax;
  const double sigma = mech.parameter;
  const PosteriorParams pp = ComputePosteriorParams(model_, sigma);
  switch (mech.kind) {
    case MechanismKind::kFull:
      return Exact(0.0);
    case MechanismKind::kNull:
      if (max) return Quadrature(NullEveMax());
      return Exact(
          ZeroOneRisk(NormalSf(model_.c_e / std::sqrt(pp.v_xbar))));
    case MechanismKind::kNoisyFull: {
      if (sigma == 0.0) return Exact(0.0);
      if (max) return NoisyFullEveMax(sigma);
      const double noise = sigma * sigma / model_.n;
      const double one_minus_a = noise / (pp.v_xbar + noise);
      const double sd = std::sqrt(pp.v_xbar * one_minus_a);
      const double beta = pp.a * std::sqrt(pp.v_xbar + noise) / sd;
      return Quadrature(ExpectProbitRisk(-model_.c_e / sd, beta));
    }
    case MechanismKind::kNoisyMean: {
      if (max) return Quadrature(NoisyMeanEveMax(sigma));
      if (sigma == 0.0) return Exact(0.0);
      const double noise = sigma * sigma;
      const double one_minus_a = noise / (pp.v_xbar + noise);
      const double sd = std::sqrt(pp.v_xbar * one_minus_a);
      const double beta = pp.a_tilde * std::sqrt(pp.v_xbar + noise) / sd;
      return Quadrature(ExpectProbitRisk(-model_.c_e / sd, beta));
    }
    case MechanismKind::kNoisyMedian:
      return NoisyMedian(sigma, /*bob=*/false, target);
    case MechanismKind::kOneBit:
      return OneBitEve(mech.parameter, target);
  }
  return absl::InvalidArgumentError("unknown mechanism");
}

absl::StatusOr<GaussianRisks> GaussianEvaluator::Evaluate(
    const GaussianMechanism& mech, AdversaryTarget target) const {
  GaussianRisks out;
  ASSIGN_OR_RETURN(out.bob, RiskBob(mech, target));
  ASSIGN_OR_RETURN(out.eve, RiskEve(mech, target));
  return out;
}

double GaussianEvaluator::NullEveMax() const {
  const int n = model_.n;
  const double inner = outer_.Expect([&](double z) {
    return std::pow(NormalCdf(model_.c_e - model_.sigma0 * z), n);
  });
  return ZeroOneRisk(Clamp01(1.0 - inner));
}

double GaussianEvaluator::NoisyMeanEveMax(double sigma) const {
  const int n = model_.n;
  const PosteriorParams pp = ComputePosteriorParams(model_, sigma);
  const double sd_eta =
      std::sqrt(model_.sigma0 * model_.sigma0 + pp.v_eta);
  const double slope = pp.v_mean / pp.v_eta;
  const double sd_post = std::sqrt(pp.v_mean);
  // P(max X > c_E | eta) through theta | eta; increasing in eta.
  auto p_e = [&](double z) {
    const double m = slope * sd_eta * z;
    const double stay = outer_.Expect([&](double w) {
      return std::pow(NormalCdf(model_.c_e - m - sd_post * w), n);
    });
    return Clamp01(1.0 - stay);
  };
  double lo = -GaussianIntegrator::kTailCut;
  double hi = GaussianIntegrator::kTailCut;
  double kink;
  if (p_e(lo) >= 0.5) {
    kink = lo;
  } else if (p_e(hi) <= 0.5) {
    kink = hi;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
      const double mid = 0.5 * (lo + hi);
      (p_e(mid) < 0.5 ? lo : hi) = mid;
    }
    kink = 0.5 * (lo + hi);
  }
  return outer_.ExpectSplit([&](double z) { return ZeroOneRisk(p_e(z)); },
                            kink);
}

RiskEstimate GaussianEvaluator::NoisyFullEveMax(double sigma) const {
  const int n = model_.n;
  const PosteriorParams pp = ComputePosteriorParams(model_, sigma);
  const double s = std::sqrt(pp.s2);
  const double coef = pp.v_full * n / (1.0 + sigma * sigma);
  const double post_scale = s * std::sqrt(pp.v_full);
  const PredictiveDraws& d = draws();
  const std::vector<double>& nodes = inner_.nodes();
  const std::vector<double>& weights = inner_.weights();
  std::vector<double> b(n);
  RiskAccumulator acc;
  for (int64_t m = 0; m < d.size; ++m) {
    double ybar = 0.0;
    for (int i = 0; i < n; ++i) {
      const double y = d.data[m * n + i] + sigma * d.data_noise[m * n + i];
      ybar += y;
      b[i] = (model_.c_e - (1.0 - pp.s2) * y) / s;
    }
    ybar /= n;
    const double shift = s * coef * ybar;
    // E over theta | Y of prod_i P(X_i <= c_E | theta, Y_i).
    double stay = 0.0;
    for (size_t k = 0; k < nodes.size(); ++k) {
      const double offset = shift + post_scale * nodes[k];
      double prod = 1.0;
      for (int i = 0; i < n && prod > 0.0; ++i) {
        prod *= NormalCdf(b[i] - offset);
      }
      stay += weights[k] * prod;
    }
    acc.Add(ZeroOneRisk(Clamp01(1.0 - stay)));
  }
  return acc.Finish();
}

absl::StatusOr<RiskEstimate> GaussianEvaluator::NoisyFullMeanEveMonteCarlo(
    double sigma) const {
  RETURN_IF_ERROR(GaussianMechanism::NoisyFull(sigma).Validate());
  const int n = model_.n;
  const PosteriorParams pp = ComputePosteriorParams(model_, sigma);
  const PredictiveDraws& d = draws();
  const double noise = sigma * sigma / n;
  const double sd = std::sqrt(pp.v_xbar * noise / (pp.v_xbar + noise));
  RiskAccumulator acc;
  for (int64_t m = 0; m < d.size; ++m) {
    double eps = 0.0;
    for (int i = 0; i < n; ++i) eps += d.data_noise[m * n + i];
    const double ybar = d.mean[m] + sigma * eps / n;
    const double p = sd > 0.0 ? NormalSf((model_.c_e - pp.a * ybar) / sd)
                              : (ybar > model_.c_e ? 1.0 : 0.0);
    acc.Add(ZeroOneRisk(p));
  }
  return acc.Finish();
}

absl::StatusOr<RiskEstimate> GaussianEvaluator::NoisyMedian(
    double sigma, bool bob, AdversaryTarget target) const {
  const PosteriorParams pp = ComputePosteriorParams(model_, sigma);
  const double half_width =
      cfg_.range_multiplier *
      std::sqrt(model_.sigma0 * model_.sigma0 + pp.v_med + sigma * sigma);
  ASSIGN_OR_RETURN(
      HistogramRegressor hist,
      HistogramRegressor::Create(cfg_.BinsFor(target), half_width, cfg_.alpha));
  const PredictiveDraws& d = draws();
  auto success = [&](int64_t m) {
    if (bob) return d.theta[m] > model_.c_b;
    const double stat =
        target == AdversaryTarget::kMean ? d.mean[m] : d.max[m];
    return stat > model_.c_e;
  };
  std::vector<int> cells(d.size);
  for (int64_t m = 0; m < d.size; ++m) {
    const double eta = d.median[m] + sigma * d.median_noise[m];
    cells[m] = hist.CellOf(eta);
    hist.Record(eta, success(m));
  }
  RiskAccumulator acc;
  for (int64_t m = 0; m < d.size; ++m) {
    acc.Add(ZeroOneRisk(hist.EstimateCell(cells[m])));
  }
  return acc.Finish();
}

absl::StatusOr<RiskEstimate> GaussianEvaluator::OneBitBob(double tau) const {
  if (tau == 0.0 || tau == 1.0) return RiskBob(GaussianMechanism::Null());
  ASSIGN_OR_RETURN(double t, OneBitThreshold(model_, tau));
  const double root_n = std::sqrt(static_cast<double>(model_.n));
  const double sd_xbar = std::sqrt(ComputePosteriorParams(model_, 0.0).v_xbar);
  const double lower = model_.c_b / model_.sigma0;
  const double p1 = NormalSf(t / sd_xbar);
  const double p0 = NormalCdf(t / sd_xbar);
  const double joint1 = outer_.ExpectAbove(
      [&](double z) { return NormalSf(root_n * (t - model_.sigma0 * z)); },
      lower);
  const double joint0 = outer_.ExpectAbove(
      [&](double z) { return NormalCdf(root_n * (t - model_.sigma0 * z)); },
      lower);
  auto term = [](double mass, double joint) {
    if (mass < kTinyProbability) return 0.0;
    return mass * ZeroOneRisk(Clamp01(joint / mass));
  };
  return Quadrature(term(p1, joint1) + term(p0, joint0));
}

absl::StatusOr<RiskEstimate> GaussianEvaluator::OneBitEve(
    double tau, AdversaryTarget target) const {
  if (tau == 0.0 || tau == 1.0) {
    return RiskEve(GaussianMechanism::Null(), target);
  }
  ASSIGN_OR_RETURN(double t, OneBitThreshold(model_, tau));
  if (target == AdversaryTarget::kMean) {
    const double sd = std::sqrt(ComputePosteriorParams(model_, 0.0).v_xbar);
    const double p1 = NormalSf(t / sd);
    const double p0 = NormalCdf(t / sd);
    // X | eta is a truncated normal.
    const double above =
        p1 < kTinyProbability
            ? 0.0
            : NormalSf(std::max(model_.c_e, t) / sd) / p1;
    const double below =
        p0 < kTinyProbability
            ? 0.0
            : std::max(NormalInterval(model_.c_e / sd, t / sd), 0.0) / p0;
    return Exact(p1 * ZeroOneRisk(Clamp01(above)) +
                 p0 * ZeroOneRisk(Clamp01(below)));
  }
  const PredictiveDraws& d = draws();
  int64_t count[2] = {0, 0};
  int64_t hits[2] = {0, 0};
  for (int64_t m = 0; m < d.size; ++m) {
    const int eta = d.mean[m] > t ? 1 : 0;
    ++count[eta];
    hits[eta] += d.max[m] > model_.c_e ? 1 : 0;
  }
  double risk[2] = {0.0, 0.0};
  for (int j = 0; j < 2; ++j) {
    if (count[j] > 0) {
      risk[j] = ZeroOneRisk(static_cast<double>(hits[j]) / count[j]);
    }
  }
  RiskAccumulator acc;
  for (int64_t m = 0; m < d.size; ++m) acc.Add(risk[d.mean[m] > t ? 1 : 0]);
  return acc.Finish();
}

}  // namespace bap
