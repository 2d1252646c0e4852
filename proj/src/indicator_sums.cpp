// Copyright 2026 The momentnash Authors
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

#include "momentnash/indicator_sums.hpp"

#include <cmath>
#include <vector>

namespace momentnash {

namespace {

constexpr double kNegativeClip = 1e-15;
constexpr double kSumTol = 1e-12;

// Binomial point mass b(m, n, p); zero outside 0 <= m <= n. Exact Pascal
// coefficients for small n, log-space beyond to avoid overflow/underflow.
double binomial_point(int m, int n, double p) {
  if (m < 0 || n < 0 || m > n) return 0.0;
  if (n <= 40) {
    double coeff = 1.0;
    for (int j = 0; j < m; ++j) coeff = coeff * (n - j) / (j + 1);
    return coeff * std::pow(p, m) * std::pow(1.0 - p, n - m);
  }
  const double log_pm =
      std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0) +
      m * std::log(p) + (n - m) * std::log1p(-p);
  return std::exp(log_pm);
}

}  // namespace

IndicatorCollection::IndicatorCollection(Eigen::VectorXd probs)
    : probs_(std::move(probs)) {
  for (int i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0 && probs_[i] <= 1.0)) {
      throw InputError("indicator expectation outside [0,1]");
    }
  }
}

double IndicatorCollection::mean_prob() const {
  if (probs_.size() == 0) throw InputError("mean of an empty collection");
  return probs_.mean();
}

CountDistribution::CountDistribution(Eigen::VectorXd pmf) : pmf_(std::move(pmf)) {
  if (pmf_.size() == 0) throw InputError("empty count distribution");
  for (int i = 0; i < pmf_.size(); ++i) {
    if (pmf_[i] < -kNegativeClip) {
      throw InternalError("count distribution entry negative beyond noise");
    }
    if (pmf_[i] < 0.0) pmf_[i] = 0.0;
  }
  const double total = pmf_.sum();
  if (std::abs(total - 1.0) > kSumTol) {
    throw InternalError("count distribution does not sum to 1");
  }
  pmf_ /= total;
}

CountDistribution CountDistribution::point_mass(int value, int max_count) {
  if (value < 0 || value > max_count) {
    throw InputError("point mass outside support");
  }
  Eigen::VectorXd pmf = Eigen::VectorXd::Zero(max_count + 1);
  pmf[value] = 1.0;
  return CountDistribution(std::move(pmf));
}

double CountDistribution::mean() const {
  double m = 0.0;
  for (int i = 0; i < pmf_.size(); ++i) m += i * pmf_[i];
  return m;
}

CountDistribution pbd_pmf(const IndicatorCollection& c) {
  const int n = c.size();
  Eigen::VectorXd pmf = Eigen::VectorXd::Zero(n + 1);
  pmf[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double p = c.probs()[i];
    for (int m = i + 1; m >= 1; --m) {
      pmf[m] = pmf[m] * (1.0 - p) + pmf[m - 1] * p;
    }
    pmf[0] *= (1.0 - p);
  }
  return CountDistribution(std::move(pmf));
}

double tv_distance(const CountDistribution& a, const CountDistribution& b) {
  const int len = std::max(a.max_count(), b.max_count()) + 1;
  double total = 0.0;
  for (int m = 0; m < len; ++m) {
    const double pa = m <= a.max_count() ? a.pmf()[m] : 0.0;
    const double pb = m <= b.max_count() ? b.pmf()[m] : 0.0;
    total += std::abs(pa - pb);
  }
  return 0.5 * total;
}

Eigen::VectorXd power_sums(const IndicatorCollection& c, int depth) {
  if (depth < 1) throw InputError("power sum depth must be >= 1");
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(depth);
  for (int i = 0; i < c.size(); ++i) {
    double power = 1.0;
    for (int l = 0; l < depth; ++l) {
      power *= c.probs()[i];
      sums[l] += power;
    }
  }
  return sums;
}

Eigen::VectorXd raw_moments(const CountDistribution& dist, int depth) {
  if (depth < 1) throw InputError("raw moment depth must be >= 1");
  Eigen::VectorXd moments = Eigen::VectorXd::Zero(depth);
  for (int m = 0; m <= dist.max_count(); ++m) {
    double power = 1.0;
    for (int l = 0; l < depth; ++l) {
      power *= m;
      moments[l] += power * dist.pmf()[m];
    }
  }
  return moments;
}

SignedMeasure roos_expansion(const IndicatorCollection& c, double base_p,
                             int order) {
  const int n = c.size();
  if (!(base_p > 0.0 && base_p < 1.0)) {
    throw InputError("expansion base point must lie in (0,1)");
  }
  if (order < 0 || order > n) {
    throw InputError("expansion order must lie in [0, n]");
  }

  // Elementary symmetric polynomials of the centered values p_i - base_p.
  std::vector<double> alpha(order + 1, 0.0);
  alpha[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double x = c.probs()[i] - base_p;
    for (int l = std::min(order, i + 1); l >= 1; --l) {
      alpha[l] += x * alpha[l - 1];
    }
  }

  // Pascal triangle up to `order` for the finite-difference coefficients.
  std::vector<std::vector<double>> choose(order + 1);
  for (int l = 0; l <= order; ++l) {
    choose[l].assign(l + 1, 1.0);
    for (int j = 1; j < l; ++j) {
      choose[l][j] = choose[l - 1][j - 1] + choose[l - 1][j];
    }
  }

  Eigen::VectorXd values = Eigen::VectorXd::Zero(n + 1);
  for (int m = 0; m <= n; ++m) {
    double total = 0.0;
    for (int l = 0; l <= order; ++l) {
      if (alpha[l] == 0.0) continue;
      double delta = 0.0;
      for (int j = 0; j <= l; ++j) {
        const double sign = ((l - j) % 2 == 0) ? 1.0 : -1.0;
        delta += sign * choose[l][j] * binomial_point(m - j, n - l, base_p);
      }
      total += alpha[l] * delta;
    }
    values[m] = total;
  }
  return SignedMeasure{std::move(values)};
}

double roos_bound(int depth) {
  if (depth < 0) throw InputError("depth must be >= 0");
  return 20.0 * std::pow(depth + 1.0, 0.25) *
         std::exp2(-(depth + 1.0) / 2.0);
}

IndicatorCollection complement(const IndicatorCollection& c) {
  Eigen::VectorXd flipped = Eigen::VectorXd::Ones(c.size()) - c.probs();
  return IndicatorCollection(std::move(flipped));
}

MomentProfile moment_profile(const IndicatorCollection& c, int depth) {
  if (depth < 1) throw InputError("moment profile depth must be >= 1");
  MomentProfile profile;
  profile.depth = depth;
  profile.low = Eigen::VectorXd::Zero(depth);
  profile.high = Eigen::VectorXd::Zero(depth);
  for (int i = 0; i < c.size(); ++i) {
    const double p = c.probs()[i];
    if (p == 0.0) continue;
    if (p == 1.0) {
      ++profile.ones;
      continue;
    }
    Eigen::VectorXd& side = (p <= 0.5) ? profile.low : profile.high;
    double power = 1.0;
    for (int l = 0; l < depth; ++l) {
      power *= p;
      side[l] += power;
    }
  }
  return profile;
}

}  // namespace momentnash
