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

// Gaussian quadrature rules built by the Golub-Welsch construction, and the
// expectation helpers the risk evaluators integrate with.
//
// All rules are stored as *expectation* rules: weights sum to one, so that
// Expect(f) approximates E[f(Z)] under the rule's probability measure
// (standard normal for Hermite, uniform on [-1, 1] for Legendre).

#ifndef BAP_QUADRATURE_H_
#define BAP_QUADRATURE_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "bap/normal.h"

namespace bap {

inline constexpr int kMaxQuadratureOrder = 512;
inline constexpr int kDefaultQuadratureOrder = 80;

class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
      : nodes_(std::move(nodes)), weights_(std::move(weights)) {}

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  // Sum of weight_i * f(node_i), with mirrored nodes added in pairs so odd
  // integrands cancel exactly on symmetric rules.
  template <typename F>
  double Expect(F&& f) const {
    const size_t n = nodes_.size();
    double total = 0.0;
    for (size_t i = 0, j = n - 1; i < j; ++i, --j) {
      total += weights_[i] * f(nodes_[i]) + weights_[j] * f(nodes_[j]);
    }
    if (n % 2 == 1) total += weights_[n / 2] * f(nodes_[n / 2]);
    return total;
  }

 private:
  std::vector<double> nodes_;  // ascending
  std::vector<double> weights_;
};

// Gauss-Hermite rule for the standard normal measure, exact for polynomials
// of degree <= 2 * order - 1. Order must lie in [1, kMaxQuadratureOrder].
absl::StatusOr<QuadratureRule> GaussHermite(int order);

// Gauss-Legendre rule for the uniform probability measure on [-1, 1].
absl::StatusOr<QuadratureRule> GaussLegendre(int order);

// E[f(mean + sqrt(variance) * Z)] with Z standard normal, via `rule`.
absl::StatusOr<double> ExpectGaussian(const std::function<double(double)>& f,
                                      double mean, double variance,
                                      const QuadratureRule& rule);

// Standard-normal expectations for the risk evaluators.
//
// Expect() applies the Hermite rule directly and is meant for smooth
// integrands. ExpectSplit() handles integrands with a kink or a jump at a
// known point: each side is integrated with a Legendre rule over the
// truncated half-line [-kTailCut, k] or [k, kTailCut], where the Gaussian
// mass beyond kTailCut is below 1e-23. A Hermite rule applied across a kink
// only converges like 1/order.
class GaussianIntegrator {
 public:
  static constexpr double kTailCut = 10.0;

  static absl::StatusOr<GaussianIntegrator> Create(int order);

  const QuadratureRule& hermite() const { return hermite_; }
  int order() const { return hermite_.order(); }

  template <typename F>
  double Expect(F&& f) const {
    return hermite_.Expect(std::forward<F>(f));
  }

  // E[f(Z)] where f may be non-smooth at z = breakpoint.
  template <typename F>
  double ExpectSplit(F&& f, double breakpoint) const {
    const double k = std::clamp(breakpoint, -kTailCut, kTailCut);
    return Piece(f, -kTailCut, k) + Piece(f, k, kTailCut);
  }

  // E[f(Z) 1{Z > lower}].
  template <typename F>
  double ExpectAbove(F&& f, double lower) const {
    return Piece(f, std::clamp(lower, -kTailCut, kTailCut), kTailCut);
  }

 private:
  GaussianIntegrator(QuadratureRule hermite, QuadratureRule legendre)
      : hermite_(std::move(hermite)), legendre_(std::move(legendre)) {}

  template <typename F>
  double Piece(F& f, double lo, double hi) const {
    if (!(hi > lo)) return 0.0;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    // Legendre weights are normalized to 1, so scale by the full length.
    return 2.0 * half * legendre_.Expect([&](double u) {
      const double z = mid + half * u;
      return f(z) * NormalPdf(z);
    });
  }

  QuadratureRule hermite_;
  QuadratureRule legendre_;
};

}  // namespace bap

#endif  // BAP_QUADRATURE_H_
