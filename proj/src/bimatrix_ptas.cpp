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

#include "momentnash/bimatrix_ptas.hpp"

#include <cmath>

namespace momentnash {

int sparsity(const BimatrixGame& game) {
  const int n = game.size();
  int worst = 0;
  for (const Eigen::MatrixXd* m : {&game.row_payoffs(), &game.col_payoffs()}) {
    for (int i = 0; i < n; ++i) {
      const int row_nonzeros =
          static_cast<int>((m->row(i).array() != 0.0).count());
      const int col_nonzeros =
          static_cast<int>((m->col(i).array() != 0.0).count());
      worst = std::max({worst, row_nonzeros, col_nonzeros});
    }
  }
  return worst;
}

SparseSolution solve_sparse(const BimatrixGame& game) {
  const int n = game.size();
  const int k = sparsity(game);
  return SparseSolution{uniform_pair(n), 2.0 * k / n};
}

int lmm_sample_count(int n, double epsilon) {
  if (n < 2) throw InputError("sample count requires n >= 2");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw InputError("epsilon must lie in (0,1]");
  }
  return static_cast<int>(std::ceil(16.0 * std::log(n) / (epsilon * epsilon)));
}

std::pair<Multiset, Multiset> sample_multiset_pair(int n, int t, Rng& rng) {
  if (n < 1) throw InputError("strategy count must be >= 1");
  if (t < 1) throw InputError("multiset size must be >= 1");
  Multiset a, b;
  a.items.reserve(t);
  b.items.reserve(t);
  for (int i = 0; i < t; ++i) a.items.push_back(rng.uniform_int(n));
  for (int i = 0; i < t; ++i) b.items.push_back(rng.uniform_int(n));
  return {std::move(a), std::move(b)};
}

Eigen::VectorXd empirical_distribution(const Multiset& m, int n) {
  if (m.items.empty()) throw InputError("empty multiset");
  Eigen::VectorXd dist = Eigen::VectorXd::Zero(n);
  for (int item : m.items) {
    if (item < 0 || item >= n) throw InputError("multiset item out of range");
    dist[item] += 1.0;
  }
  return dist / static_cast<double>(m.items.size());
}

SamplerReport oblivious_sampler(const BimatrixGame& game, double epsilon,
                                long long max_trials, std::uint64_t seed,
                                RegretKind kind, bool stop_at_first) {
  if (max_trials < 1) throw InputError("max_trials must be >= 1");
  const int n = game.size();
  const int t = lmm_sample_count(std::max(n, 2), epsilon);

  SamplerReport report;
  report.seed = seed;
  report.rng_algorithm = Rng::kAlgorithm;
  report.sample_size = t;
  report.epsilon = epsilon;

  Rng rng(seed);
  for (long long trial = 0; trial < max_trials; ++trial) {
    auto [a, b] = sample_multiset_pair(n, t, rng);
    ++report.trials;
    const MixedPair candidate{empirical_distribution(a, n),
                              empirical_distribution(b, n)};
    const RegretPair regret = bimatrix_regret(game, candidate, kind);
    if (regret.max() <= epsilon) {
      ++report.successes;
      if (!report.first_success) {
        report.first_success = candidate;
        report.first_success_trial = trial;
      }
      if (stop_at_first) break;
    }
  }
  return report;
}

MixedPair sample_from_equilibrium(const MixedPair& pair, int t, Rng& rng) {
  if (t < 1) throw InputError("sample size must be >= 1");
  const auto resample = [&](const Eigen::VectorXd& dist) {
    const int n = static_cast<int>(dist.size());
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(n);
    for (int s = 0; s < t; ++s) {
      const double u = rng.uniform01();
      double cumulative = 0.0;
      int picked = n - 1;
      for (int i = 0; i < n; ++i) {
        cumulative += dist[i];
        if (u < cumulative) {
          picked = i;
          break;
        }
      }
      counts[picked] += 1.0;
    }
    return Eigen::VectorXd(counts / static_cast<double>(t));
  };
  return MixedPair{resample(pair.x), resample(pair.y)};
}

}  // namespace momentnash
