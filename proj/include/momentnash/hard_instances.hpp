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
// Generators for adversarial fixtures and random test games: the
// subset-family bimatrix games whose equilibria pin the row player to a
// uniform distribution, the prescribed-equilibrium anonymous family, and
// seeded random sparse/anonymous games.

#ifndef MOMENTNASH_HARD_INSTANCES_HPP_
#define MOMENTNASH_HARD_INSTANCES_HPP_

#include <cstdint>
#include <vector>

#include "momentnash/games.hpp"

namespace momentnash {

// Parameters of the subset-family game: ell is even, S is a subset of the
// strategy set of size ell, and the game has n = C(ell, ell/2) strategies
// per player, one column per size-(ell/2) subset of S.
struct GsSpec {
  int ell = 2;
  std::vector<int> s;  // strictly increasing indices in [0, n)

  // S = {0, ..., ell-1}.
  static GsSpec canonical(int ell);
};

// Columns are indexed by the size-(ell/2) subsets of S in lexicographic
// order over the sorted S. Column j: rows outside S get (-1, +1); rows in
// the j-th subset get (+1, 0); remaining rows of S get (0, +1). The pair
// (uniform over S, uniform over all columns) is an exact equilibrium.
BimatrixGame gen_gs_game(const GsSpec& spec);

// Parameters of the prescribed-equilibrium anonymous family: k type-A
// players with target probabilities p_i in [3*delta*k, 1], one player each
// of types B and C.
struct GpSpec {
  int k = 1;
  double delta = 0.05;
  Eigen::VectorXd p;
};

// A (k+2)-player two-strategy anonymous game (typed; see GpPayoffs) in
// which every equilibrium keeps player i's mixing probability near p_i and
// at least one of B, C plays 1 with probability 0.
AnonymousGame gen_gp_game(const GpSpec& spec);

// Seed-deterministic random game with at most k nonzeros per row and column
// of each payoff matrix, values uniform in [-1,1].
BimatrixGame gen_random_sparse(int n, int k, std::uint64_t seed);

// Seed-deterministic random anonymous game, utilities uniform in [-1,1].
AnonymousGame gen_random_anonymous(int n, std::uint64_t seed);

// C(n, k) as a long long; throws on overflow.
long long binomial_coefficient(int n, int k);

}  // namespace momentnash

#endif  // MOMENTNASH_HARD_INSTANCES_HPP_
