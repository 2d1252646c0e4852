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
// Approximation schemes for bimatrix games: the uniform-pair solver for
// sparse games and the oblivious random-multiset sampler for games with
// small-probability equilibria.

#ifndef MOMENTNASH_BIMATRIX_PTAS_HPP_
#define MOMENTNASH_BIMATRIX_PTAS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentnash/games.hpp"

namespace momentnash {

// An ordered multiset of strategy indices (repetitions allowed).
struct Multiset {
  std::vector<int> items;
};

struct SamplerReport {
  long long trials = 0;
  long long successes = 0;
  std::optional<MixedPair> first_success;
  long long first_success_trial = -1;  // 0-based; -1 if none
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  int sample_size = 0;  // multiset size t used for every trial
  double epsilon = 0.0;
};

// Smallest k such that every row and column of both payoff matrices has at
// most k nonzero entries.
int sparsity(const BimatrixGame& game);

struct SparseSolution {
  MixedPair pair;
  double regret_bound = 0.0;  // certified bound 2k/n on well-supported regret
};

// The uniform pair: against a uniform opponent every pure strategy earns a
// value in [-k/n, k/n], so no supported strategy is further than 2k/n from a
// best response.
SparseSolution solve_sparse(const BimatrixGame& game);

// ceil(16 ln(n) / epsilon^2): the number of samples per strategy that makes
// empirical payoffs concentrate within epsilon/2 (the concentration step
// forces the natural logarithm). Requires n >= 2, epsilon in (0,1].
int lmm_sample_count(int n, double epsilon);

// Two multisets of t indices, each drawn independently and uniformly from
// {0..n-1}. Deterministic given the generator state.
std::pair<Multiset, Multiset> sample_multiset_pair(int n, int t, Rng& rng);

// Uniform distribution over the items of a multiset, as a strategy vector.
Eigen::VectorXd empirical_distribution(const Multiset& m, int n);

// Repeatedly samples multiset pairs of size lmm_sample_count(n, epsilon),
// forms the uniform strategies over them, and tests each pair for being an
// epsilon-Nash equilibrium; stops at the first success (unless stop_at_first
// is cleared for rate estimation) or after max_trials. The sample sequence
// is a function of (n, epsilon, seed) only; the game is consulted solely to
// test candidates.
SamplerReport oblivious_sampler(const BimatrixGame& game, double epsilon,
                                long long max_trials, std::uint64_t seed,
                                RegretKind kind = RegretKind::kWellSupported,
                                bool stop_at_first = true);

// Empirical pair formed by t independent samples from each of x and y.
MixedPair sample_from_equilibrium(const MixedPair& pair, int t, Rng& rng);

}  // namespace momentnash

#endif  // MOMENTNASH_BIMATRIX_PTAS_HPP_
