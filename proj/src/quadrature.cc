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

#include "bap/quadrature.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "bap/status_macros.h"

namespace bap {
namespace {

// Off-diagonal entry b_k (k >= 1) of the Jacobi matrix of a symmetric
// measure. The diagonal is identically zero.
using OffDiagonal = double (*)(int);

double HermiteOffDiagonal(int k) { return std::sqrt(static_cast<double>(k)); }

double LegendreOffDiagonal(int k) {
  const double kk = static_cast<double>(k);
  return kk / std::sqrt(4.0 * kk * kk - 1.0);
}

// Eigenvalues of the symmetric tridiagonal matrix with zero diagonal and
// off-diagonal `e` (implicit QL with Wilkinson shifts).
absl::StatusOr<std::vector<double>> TridiagonalEigenvalues(
    std::vector<double> e) {
  const int n = static_cast<int>(e.size());
  std::vector<double> d(n, 0.0);
  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-17 * dd) break;
      }
      if (m != l) {
        if (++iterations > 100) {
          return absl::InternalError("QL iteration did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

struct Orthonormal {
  double value;       // p_n(x)
  double derivative;  // p_n'(x)
  double sum_sq;      // sum_{k < n} p_k(x)^2
};

Orthonormal EvaluateOrthonormal(int n, OffDiagonal b, double x) {
  double p_prev = 0.0, p = 1.0;
  double dp_prev = 0.0, dp = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_sq += p * p;
    const double b_next = b(k + 1);
    const double b_k = k > 0 ? b(k) : 0.0;
    const double p_next = (x * p - b_k * p_prev) / b_next;
    const double dp_next = (p + x * dp - b_k * dp_prev) / b_next;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp, sum_sq};
}

absl::StatusOr<QuadratureRule> GolubWelsch(int order, OffDiagonal b) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    return absl::InvalidArgumentError(
        absl::StrFormat("quadrature order must lie in [1, %d], got %d",
                        kMaxQuadratureOrder, order));
  }
  std::vector<double> off(order, 0.0);
  for (int k = 1; k < order; ++k) off[k - 1] = b(k);
  ASSIGN_OR_RETURN(std::vector<double> nodes,
                   TridiagonalEigenvalues(std::move(off)));

  // Polish the eigenvalues with Newton steps on p_n, then take the weights
  // from the Christoffel function, which keeps tail weights accurate in
  // relative terms.
  std::vector<double> weights(order, 0.0);
  for (int i = 0; i < order; ++i) {
    double x = nodes[i];
    for (int step = 0; step < 3; ++step) {
      const Orthonormal o = EvaluateOrthonormal(order, b, x);
      if (!std::isfinite(o.value) || !std::isfinite(o.derivative) ||
          o.derivative == 0.0) {
        break;
      }
      const double dx = o.value / o.derivative;
      if (!std::isfinite(dx) || std::abs(dx) > 1e-3 * (1.0 + std::abs(x))) {
        break;
      }
      x -= dx;
    }
    nodes[i] = x;
    const Orthonormal o = EvaluateOrthonormal(order, b, x);
    weights[i] = std::isfinite(o.sum_sq) ? 1.0 / o.sum_sq : 0.0;
  }

  // Both measures are symmetric about zero.
  for (int i = 0; i < order / 2; ++i) {
    const int j = order - 1 - i;
    const double node = 0.5 * (nodes[j] - nodes[i]);
    const double weight = 0.5 * (weights[i] + weights[j]);
    nodes[i] = -node;
    nodes[j] = node;
    weights[i] = weights[j] = weight;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;

  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
  return QuadratureRule(std::move(nodes), std::move(weights));
}

}  // namespace

absl::StatusOr<QuadratureRule> GaussHermite(int order) {
  return GolubWelsch(order, &HermiteOffDiagonal);
}

absl::StatusOr<QuadratureRule> GaussLegendre(int order) {
  return GolubWelsch(order, &LegendreOffDiagonal);
}

absl::StatusOr<double> ExpectGaussian(const std::function<double(double)>& f,
                                      double mean, double variance,
                                      const QuadratureRule& rule) {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("variance must be positive, got %g", variance));
  }
  const double sd = std::sqrt(variance);
  return rule.Expect([&](double z) { return f(mean + sd * z); });
}

absl::StatusOr<GaussianIntegrator> GaussianIntegrator::Create(int order) {
  ASSIGN_OR_RETURN(QuadratureRule hermite, GaussHermite(order));
  ASSIGN_OR_RETURN(QuadratureRule legendre, GaussLegendre(order));
  return GaussianIntegrator(std::move(hermite), std::move(legendre));
}

}  // namespace bap
