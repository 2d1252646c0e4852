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
//
// Exact computations on sums of independent Bernoulli indicators (Poisson
// binomial distributions): pmf, total variation distance, power sums, raw
// moments, the Roos binomial-derivative expansion, and moment profiles.

#ifndef MOMENTNASH_INDICATOR_SUMS_HPP_
#define MOMENTNASH_INDICATOR_SUMS_HPP_

#include <Eigen/Dense>

#include "momentnash/common.hpp"

namespace momentnash {

// Expectations p_1..p_n of independent Bernoulli indicators. Immutable after
// construction; every entry must lie in [0, 1].
class IndicatorCollection {
 public:
  IndicatorCollection() = default;
  explicit IndicatorCollection(Eigen::VectorXd probs);

  int size() const { return static_cast<int>(probs_.size()); }
  const Eigen::VectorXd& probs() const { return probs_; }
  // Mean expectation p-bar; requires a nonempty collection.
  double mean_prob() const;

 private:
  Eigen::VectorXd probs_;
};

// Exact probability vector over {0..n} for a sum of indicators. Entries in
// [-1e-15, ...] are clipped to zero and the vector is renormalized; more
// negative entries or a total far from 1 indicate a bug upstream.
class CountDistribution {
 public:
  explicit CountDistribution(Eigen::VectorXd pmf);
  static CountDistribution point_mass(int value, int max_count);

  const Eigen::VectorXd& pmf() const { return pmf_; }
  int max_count() const { return static_cast<int>(pmf_.size()) - 1; }
  double mean() const;

 private:
  Eigen::VectorXd pmf_;
};

// A finite signed measure over {0..n}; entries may be negative and need not
// sum to 1 (truncated expansions live here).
struct SignedMeasure {
  Eigen::VectorXd values;
};

// The (2d+1)-dimensional aggregate used to deduplicate collections: power
// sums over the indicators with p in (0,1/2] ("low"), power sums over those
// with p in (1/2,1) ("high"), and the number of deterministic-1 indicators.
// Indicators with p = 0 contribute nowhere.
struct MomentProfile {
  int depth = 0;
  Eigen::VectorXd low;   // length depth; low[l-1] = sum over low side of p^l
  Eigen::VectorXd high;  // length depth
  int ones = 0;
};

// pmf[m] = Pr[sum X_i = m], by incremental convolution in O(n^2).
CountDistribution pbd_pmf(const IndicatorCollection& c);

// (1/2) sum_m |a[m] - b[m]|, padding the shorter support with zeros.
double tv_distance(const CountDistribution& a, const CountDistribution& b);

// pi_l = sum_i p_i^l for l = 1..depth.
Eigen::VectorXd power_sums(const IndicatorCollection& c, int depth);

// E[S^l] for l = 1..depth, S distributed as `dist`.
Eigen::VectorXd raw_moments(const CountDistribution& dist, int depth);

// Truncated expansion of a Poisson binomial pmf around Binomial(n, base_p):
//
//   sum_{l=0}^{order} alpha_l * delta^l B_{n,p}(m)
//
// where alpha_l is the l-th elementary symmetric polynomial of (p_i - p) and
// delta^l B is the normalized l-th derivative of the binomial pmf in p,
// evaluated through the closed-form alternating sum
//   delta^l B_{n,p}(m) = sum_{j=0}^{l} (-1)^{l-j} C(l,j) b(m-j, n-l, p)
// with b(m,n,p) = 0 outside 0 <= m <= n. With order = n the expansion is
// exact and reproduces pbd_pmf. Requires base_p in (0,1), 0 <= order <= n.
SignedMeasure roos_expansion(const IndicatorCollection& c, double base_p,
                             int order);

// 20 (d+1)^{1/4} 2^{-(d+1)/2}: the total variation bound satisfied by two
// sums of indicators with expectations in (0,1/2] whose first d power sums
// agree. Strictly decreasing for d >= 1; vacuous (greater than 1) until
// d is around 9.
double roos_bound(int depth);

// The collection (1 - p_i); its count distribution is the reversal of the
// original one.
IndicatorCollection complement(const IndicatorCollection& c);

MomentProfile moment_profile(const IndicatorCollection& c, int depth);

}  // namespace momentnash

#endif  // MOMENTNASH_INDICATOR_SUMS_HPP_
