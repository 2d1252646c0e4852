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

#include <map>

#include "doctest.h"

#include "momentnash/indicator_sums.hpp"
#include "test_util.hpp"

using namespace momentnash;

namespace {

IndicatorCollection make(std::initializer_list<double> probs) {
  Eigen::VectorXd v(probs.size());
  int i = 0;
  for (double p : probs) v[i++] = p;
  return IndicatorCollection(std::move(v));
}

IndicatorCollection random_collection(Rng& rng, int n, double lo = 0.02,
                                      double hi = 0.98) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.uniform_real(lo, hi);
  return IndicatorCollection(std::move(v));
}

}  // namespace

TEST_CASE("pbd_pmf matches direct enumeration on two indicators") {
  const CountDistribution dist = pbd_pmf(make({0.2, 0.3}));
  CHECK(dist.pmf()[0] == doctest::Approx(0.56).epsilon(1e-12));
  CHECK(dist.pmf()[1] == doctest::Approx(0.38).epsilon(1e-12));
  CHECK(dist.pmf()[2] == doctest::Approx(0.06).epsilon(1e-12));
}

TEST_CASE("pbd_pmf of a single indicator") {
  const CountDistribution dist = pbd_pmf(make({0.7}));
  CHECK(dist.pmf()[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(dist.pmf()[1] == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("pbd_pmf of three fair coins is Binomial(3, 1/2)") {
  const CountDistribution dist = pbd_pmf(make({0.5, 0.5, 0.5}));
  CHECK(dist.pmf()[0] == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(dist.pmf()[1] == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(dist.pmf()[2] == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(dist.pmf()[3] == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("pbd_pmf agrees with the 2^n enumeration oracle") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + rng.uniform_int(10);
    const IndicatorCollection c = random_collection(rng, n, 0.0, 1.0);
    const Eigen::VectorXd oracle = testutil::enumerate_pmf(c.probs());
    const CountDistribution dist = pbd_pmf(c);
    REQUIRE(dist.max_count() == n);
    for (int m = 0; m <= n; ++m) {
      CHECK(std::abs(dist.pmf()[m] - oracle[m]) <= 1e-12);
    }
    CHECK(std::abs(dist.pmf().sum() - 1.0) <= 1e-12);
    CHECK(std::abs(dist.mean() - power_sums(c, 1)[0]) <= 1e-12);
  }
}

TEST_CASE("pbd_pmf of the empty collection is a point mass at zero") {
  const CountDistribution dist =
      pbd_pmf(IndicatorCollection(Eigen::VectorXd()));
  REQUIRE(dist.max_count() == 0);
  CHECK(dist.pmf()[0] == 1.0);
}

TEST_CASE("indicator collections reject out-of-range expectations") {
  Eigen::VectorXd bad(2);
  bad << 0.5, 1.2;
  CHECK_THROWS_AS(IndicatorCollection{bad}, InputError);
}

TEST_CASE("tv_distance basics") {
  const CountDistribution a = pbd_pmf(make({0.1, 0.4}));
  const CountDistribution b = pbd_pmf(make({0.25, 0.25}));
  CHECK(tv_distance(a, a) == 0.0);
  CHECK(tv_distance(a, b) == doctest::Approx(0.045).epsilon(1e-12));
  CHECK(tv_distance(b, a) == doctest::Approx(0.045).epsilon(1e-12));
  const CountDistribution lo = CountDistribution::point_mass(0, 5);
  const CountDistribution hi = CountDistribution::point_mass(5, 5);
  CHECK(tv_distance(lo, hi) == 1.0);
}

TEST_CASE("tv_distance pads supports of different lengths") {
  const CountDistribution a = CountDistribution::point_mass(0, 0);
  const CountDistribution b = CountDistribution::point_mass(3, 3);
  CHECK(tv_distance(a, b) == 1.0);
}

TEST_CASE("tv_distance is a metric on random distributions") {
  Rng rng(23);
  const auto random_dist = [&](int n) {
    Eigen::VectorXd v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = rng.uniform01() + 1e-3;
    v /= v.sum();
    return CountDistribution(std::move(v));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng.uniform_int(8);
    const CountDistribution a = random_dist(n);
    const CountDistribution b = random_dist(n);
    const CountDistribution c = random_dist(n);
    const double ab = tv_distance(a, b);
    CHECK(ab == tv_distance(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(tv_distance(a, c) <= ab + tv_distance(b, c) + 1e-15);
  }
}

TEST_CASE("power_sums on small collections") {
  const Eigen::VectorXd s = power_sums(make({0.1, 0.4}), 2);
  CHECK(s[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s[1] == doctest::Approx(0.17).epsilon(1e-12));
  const Eigen::VectorXd z = power_sums(make({0.0, 0.0, 0.0}), 3);
  CHECK(z.isZero(0.0));
  const Eigen::VectorXd t = power_sums(make({0.25, 0.25}), 2);
  CHECK(t[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t[1] == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("raw_moments on small collections") {
  const Eigen::VectorXd a = raw_moments(pbd_pmf(make({0.1, 0.4})), 2);
  CHECK(a[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a[1] == doctest::Approx(0.58).epsilon(1e-12));
  const Eigen::VectorXd b = raw_moments(pbd_pmf(make({0.25, 0.25})), 2);
  CHECK(b[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(b[1] == doctest::Approx(0.625).epsilon(1e-12));
  const Eigen::VectorXd c =
      raw_moments(CountDistribution::point_mass(3, 6), 2);
  CHECK(c[0] == 3.0);
  CHECK(c[1] == 9.0);
}

TEST_CASE("full-order expansion reproduces the exact pmf") {
  const SignedMeasure m = roos_expansion(make({0.2, 0.3}), 0.25, 2);
  CHECK(std::abs(m.values[0] - 0.56) <= 1e-9);
  CHECK(std::abs(m.values[1] - 0.38) <= 1e-9);
  CHECK(std::abs(m.values[2] - 0.06) <= 1e-9);
}

TEST_CASE("full-order expansion is exact for random collections") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + rng.uniform_int(12);
    const IndicatorCollection c = random_collection(rng, n);
    const SignedMeasure m = roos_expansion(c, c.mean_prob(), n);
    const CountDistribution exact = pbd_pmf(c);
    for (int i = 0; i <= n; ++i) {
      CHECK(std::abs(m.values[i] - exact.pmf()[i]) <= 1e-9);
    }
  }
}

TEST_CASE("expansion collapses to the binomial for equal expectations") {
  const IndicatorCollection c = make({0.3, 0.3, 0.3, 0.3});
  const CountDistribution exact = pbd_pmf(c);
  for (int order : {0, 1, 2, 4}) {
    const SignedMeasure m = roos_expansion(c, 0.3, order);
    for (int i = 0; i <= 4; ++i) {
      CHECK(std::abs(m.values[i] - exact.pmf()[i]) <= 1e-12);
    }
  }
}

TEST_CASE("zeroth-order expansion is the base binomial") {
  const SignedMeasure m = roos_expansion(make({0.2, 0.3}), 0.25, 0);
  CHECK(m.values[0] == doctest::Approx(0.5625).epsilon(1e-12));
  CHECK(m.values[1] == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(m.values[2] == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("expansion rejects invalid base points and orders") {
  CHECK_THROWS_AS(roos_expansion(make({0.2}), 0.0, 1), InputError);
  CHECK_THROWS_AS(roos_expansion(make({0.2}), 1.0, 1), InputError);
  CHECK_THROWS_AS(roos_expansion(make({0.2}), 0.5, 2), InputError);
  CHECK_THROWS_AS(roos_expansion(make({0.2}), 0.5, -1), InputError);
}

TEST_CASE("roos_bound values and monotonicity") {
  CHECK(std::abs(roos_bound(28) - 0.002003) <= 2e-6);
  CHECK(roos_bound(1) ==
        doctest::Approx(20.0 * std::pow(2.0, 0.25) / 2.0).epsilon(1e-12));
  CHECK(std::abs(roos_bound(19) - 0.0413) <= 1e-4);
  for (int d = 1; d < 40; ++d) CHECK(roos_bound(d + 1) < roos_bound(d));
}

TEST_CASE("complement flips expectations and reverses the pmf") {
  const IndicatorCollection flipped = complement(make({0.7, 0.9}));
  CHECK(flipped.probs()[0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(flipped.probs()[1] == doctest::Approx(0.1).epsilon(1e-15));

  const IndicatorCollection ones = make({1.0, 1.0});
  CHECK(complement(ones).probs().isZero(0.0));

  const IndicatorCollection c = make({0.6, 0.8});
  const CountDistribution straight = pbd_pmf(c);
  const CountDistribution reversed = pbd_pmf(complement(c));
  CHECK(straight.pmf()[0] == doctest::Approx(0.08).epsilon(1e-12));
  CHECK(straight.pmf()[1] == doctest::Approx(0.44).epsilon(1e-12));
  CHECK(straight.pmf()[2] == doctest::Approx(0.48).epsilon(1e-12));
  for (int m = 0; m <= 2; ++m) {
    CHECK(std::abs(straight.pmf()[m] - reversed.pmf()[2 - m]) <= 1e-12);
  }
}

TEST_CASE("moment_profile splits by half-open intervals") {
  const MomentProfile p = moment_profile(make({0.0, 0.25, 0.75, 1.0}), 2);
  CHECK(p.low[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p.low[1] == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(p.high[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(p.high[1] == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(p.ones == 1);

  const MomentProfile z = moment_profile(make({0.0, 0.0}), 3);
  CHECK(z.low.isZero(0.0));
  CHECK(z.high.isZero(0.0));
  CHECK(z.ones == 0);

  // 1/2 belongs to the low side of the split.
  const MomentProfile h = moment_profile(make({0.5, 0.5}), 1);
  CHECK(h.low[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h.high[0] == 0.0);
  CHECK(h.ones == 0);
}

TEST_CASE("profile power sums never increase with the exponent") {
  Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + rng.uniform_int(8);
    Eigen::VectorXd probs(n);
    for (int i = 0; i < n; ++i) probs[i] = rng.uniform01();
    const MomentProfile p = moment_profile(IndicatorCollection(probs), 4);
    for (int l = 0; l + 1 < 4; ++l) {
      CHECK(p.low[l] >= p.low[l + 1]);
      CHECK(p.high[l] >= p.high[l + 1]);
    }
  }
}

// Power sums agree to depth d iff the raw moments of the count
// distributions agree to depth d; exhaustive over the 1/8 grid, n <= 3.
TEST_CASE("power-sum and raw-moment agreement are equivalent") {
  std::vector<int> grid;
  for (int j = 0; j <= 8; ++j) grid.push_back(j);
  for (int n = 1; n <= 3; ++n) {
    const auto sets = testutil::multisets(grid, n);
    std::vector<Eigen::VectorXd> raws;
    std::vector<std::vector<long long>> keys;  // exact integer power sums
    for (const auto& set : sets) {
      Eigen::VectorXd p(n);
      std::vector<long long> key(3, 0);
      for (int i = 0; i < n; ++i) {
        p[i] = set[i] / 8.0;
        long long power = 1;
        for (int l = 0; l < 3; ++l) {
          power *= set[i];
          key[l] += power;
        }
      }
      keys.push_back(key);
      raws.push_back(raw_moments(pbd_pmf(IndicatorCollection(p)), 3));
    }
    for (size_t a = 0; a < sets.size(); ++a) {
      for (size_t b = a + 1; b < sets.size(); ++b) {
        for (int d = 1; d <= 3; ++d) {
          bool c_d = true;
          for (int l = 0; l < d; ++l) c_d = c_d && keys[a][l] == keys[b][l];
          bool v_d = true;
          for (int l = 0; l < d; ++l) {
            v_d = v_d && std::abs(raws[a][l] - raws[b][l]) <= 1e-10;
          }
          CHECK(c_d == v_d);
        }
      }
    }
  }
}

// Collections in (0,1/2] with equal first-d power sums have total variation
// within the bound; the complement family in [1/2,1) inherits it.
TEST_CASE("matched power sums bound the total variation") {
  std::vector<int> low_grid;
  for (int j = 1; j <= 4; ++j) low_grid.push_back(j);
  for (int n = 2; n <= 4; ++n) {
    const auto sets = testutil::multisets(low_grid, n);
    for (int d = 1; d <= 3; ++d) {
      std::map<std::vector<long long>, std::vector<size_t>> groups;
      for (size_t idx = 0; idx < sets.size(); ++idx) {
        std::vector<long long> key(d, 0);
        for (int v : sets[idx]) {
          long long power = 1;
          for (int l = 0; l < d; ++l) {
            power *= v;
            key[l] += power;
          }
        }
        groups[key].push_back(idx);
      }
      for (const auto& [key, members] : groups) {
        for (size_t a = 0; a < members.size(); ++a) {
          for (size_t b = a + 1; b < members.size(); ++b) {
            Eigen::VectorXd pa(n), pb(n);
            for (int i = 0; i < n; ++i) {
              pa[i] = sets[members[a]][i] / 8.0;
              pb[i] = sets[members[b]][i] / 8.0;
            }
            const double tv = tv_distance(pbd_pmf(IndicatorCollection(pa)),
                                          pbd_pmf(IndicatorCollection(pb)));
            CHECK(tv <= roos_bound(d) + 1e-12);
            const double tv_flip =
                tv_distance(pbd_pmf(complement(IndicatorCollection(pa))),
                            pbd_pmf(complement(IndicatorCollection(pb))));
            CHECK(tv_flip <= roos_bound(d) + 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("count distributions clip only floating-point noise") {
  Eigen::VectorXd noisy(3);
  noisy << 0.5, 0.5, -5e-16;
  const CountDistribution dist{Eigen::VectorXd(noisy)};
  CHECK(dist.pmf()[2] == 0.0);

  Eigen::VectorXd bad(3);
  bad << 0.6, 0.5, -0.1;
  CHECK_THROWS_AS(CountDistribution{bad}, InternalError);
}
