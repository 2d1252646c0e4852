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

#include "momentnash/sparse_cover.hpp"

#include <set>

#include "momentnash/detail/moment_reach.hpp"

namespace momentnash {

using detail::UniformReach;

std::vector<CoverElement> enumerate_binomial_forms(int n, int k) {
  if (n < 1) throw InputError("n must be >= 1");
  if (k < 2) throw InputError("k must be >= 2");
  std::vector<CoverElement> forms;
  const long long kn = static_cast<long long>(k) * n;
  const long long k2 = static_cast<long long>(k) * k;
  for (int ell = 0; ell <= n; ++ell) {
    for (long long q_num = 1; q_num < kn; ++q_num) {
      // ell*q >= k^2 - 1/k, i.e. ell*q_num >= n*(k^3 - 1).
      if (static_cast<__int128>(ell) * q_num <
          static_cast<__int128>(n) * (k2 * k - 1)) {
        continue;
      }
      // ell*q*(1-q) >= k^2 - k - 1 - 3/k, cleared of denominators:
      // ell*q_num*(kn - q_num)*k >= (k^3 - k^2 - k - 3)*k^2*n^2.
      const __int128 lhs =
          static_cast<__int128>(ell) * q_num * (kn - q_num) * k;
      const __int128 rhs = static_cast<__int128>(k2 * k - k2 - k - 3) * k2 *
                           n * static_cast<__int128>(n);
      if (lhs < rhs) continue;
      for (int ones = 0; ones + ell <= n; ++ones) {
        forms.push_back(CoverElement{BinomialForm{ell, q_num, kn, ones}});
      }
    }
  }
  return forms;
}

std::vector<std::pair<ExactMomentProfile, CoverElement>>
enumerate_sparse_profiles(int n, int k, int d) {
  if (n < 1) throw InputError("n must be >= 1");
  if (k < 2) throw InputError("k must be >= 2");
  if (d < 1) throw InputError("d must be >= 1");
  const int k2 = k * k;
  const int mixer_cap = std::min<long long>(n, static_cast<long long>(k) * k * k);

  const UniformReach low_reach(detail::small_numerators(k2), d, mixer_cap);
  const UniformReach high_reach(detail::big_numerators(k2), d, mixer_cap);

  std::vector<std::pair<ExactMomentProfile, CoverElement>> out;
  std::set<ExactMomentProfile> seen;
  for (int ms = 0; ms <= mixer_cap; ++ms) {
    const auto low_targets = low_reach.targets(ms);
    for (int mb = 0; ms + mb <= mixer_cap; ++mb) {
      const auto high_targets = high_reach.targets(mb);
      for (int ones = 0; ms + mb + ones <= n; ++ones) {
        for (const auto& low : low_targets) {
          for (const auto& high : high_targets) {
            if (out.size() >= 2'000'000) {
              throw ResourceError("sparse profile enumeration exceeds budget");
            }
            ExactMomentProfile profile{low, high, ones};
            if (!seen.insert(profile).second) continue;
            const auto low_witness = low_reach.witness(low, ms);
            const auto high_witness = high_reach.witness(high, mb);
            SparseForm form;
            form.k2 = k2;
            form.expectation_nums = *low_witness;
            form.expectation_nums.insert(form.expectation_nums.end(),
                                         high_witness->begin(),
                                         high_witness->end());
            form.ones = ones;
            out.emplace_back(std::move(profile),
                             CoverElement{std::move(form)});
          }
        }
      }
    }
  }
  return out;
}

Cover build_cover(int n, int k, int d) {
  Cover cover;
  cover.n = n;
  cover.k = k;
  cover.d = d;
  for (auto& [profile, element] : enumerate_sparse_profiles(n, k, d)) {
    cover.profile_index.emplace(std::move(profile),
                                static_cast<int>(cover.elements.size()));
    cover.elements.push_back(std::move(element));
  }
  for (CoverElement& element : enumerate_binomial_forms(n, k)) {
    cover.elements.push_back(std::move(element));
  }
  return cover;
}

CountDistribution element_distribution(const CoverElement& element, int n) {
  Eigen::VectorXd probs;
  int ones = 0;
  if (const auto* sparse = std::get_if<SparseForm>(&element.form)) {
    probs.resize(sparse->expectation_nums.size());
    for (size_t i = 0; i < sparse->expectation_nums.size(); ++i) {
      probs[i] =
          static_cast<double>(sparse->expectation_nums[i]) / sparse->k2;
    }
    ones = sparse->ones;
  } else {
    const auto& binom = std::get<BinomialForm>(element.form);
    probs = Eigen::VectorXd::Constant(
        binom.ell, static_cast<double>(binom.q_num) / binom.kn);
    ones = binom.ones;
  }
  if (static_cast<int>(probs.size()) + ones > n) {
    throw InputError("cover element does not fit in n indicators");
  }
  const CountDistribution mixers = pbd_pmf(IndicatorCollection(probs));
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(n + 1);
  for (int m = 0; m <= mixers.max_count(); ++m) {
    padded[m + ones] = mixers.pmf()[m];
  }
  return CountDistribution(std::move(padded));
}

std::pair<int, double> cover_check(const Cover& cover,
                                   const IndicatorCollection& c) {
  if (cover.elements.empty()) throw InputError("empty cover");
  if (c.size() != cover.n) {
    throw InputError("collection length disagrees with the cover");
  }
  const CountDistribution target = pbd_pmf(c);
  int best = -1;
  double best_tv = 2.0;
  for (size_t i = 0; i < cover.elements.size(); ++i) {
    const double tv =
        tv_distance(target, element_distribution(cover.elements[i], cover.n));
    if (tv < best_tv) {
      best_tv = tv;
      best = static_cast<int>(i);
    }
  }
  return {best, best_tv};
}

}  // namespace momentnash
