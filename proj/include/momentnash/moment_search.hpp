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
// Moment search: an approximation scheme for two-strategy anonymous games
// that enumerates aggregate descriptions of candidate equilibria (pure-play
// counts plus the first d power sums of the mixing probabilities), classifies
// per-player permitted grid strategies against a witness realization of each
// aggregate, and reconstructs a consistent assignment by dynamic programming.
// Includes the complementary single-probability search and a brute-force
// grid oracle for desk-scale verification.

#ifndef MOMENTNASH_MOMENT_SEARCH_HPP_
#define MOMENTNASH_MOMENT_SEARCH_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "momentnash/games.hpp"

namespace momentnash {

// Parameters of the search. Mixing probabilities live on the grid of
// multiples of 1/k^2; d is the number of matched power sums. The theory
// couples both to epsilon (see structural_params), but they remain
// independent knobs here: the d that makes the moment bound tight is far
// beyond desk-scale budgets, and verify_output restores soundness
// unconditionally by re-checking every candidate profile exactly.
struct SearchParams {
  double epsilon = 0.1;
  int k = 2;
  int d = 1;
  double c = 1.0;
  bool verify_output = true;
};

// k = 2*ceil(c/epsilon) (doubled so the grid supports an epsilon/2 solution)
// and d = ceil(3*log2(320/epsilon)); explicit overrides win verbatim.
SearchParams structural_params(double epsilon, double c = 1.0,
                               std::optional<int> k_override = std::nullopt,
                               std::optional<int> d_override = std::nullopt);

// One aggregate guess: t0 players play pure 0, t1 pure 1, ts mix with a
// probability in (0,1/2] and tb with a probability in (1/2,1); low_moments[l]
// and high_moments[l] are the (l+1)-power sums of the two mixing groups,
// stored exactly as integer numerators over (k^2)^(l+1).
struct AggregateGuess {
  int k2 = 0;
  int t0 = 0, t1 = 0, ts = 0, tb = 0;
  std::vector<long long> low_moments;
  std::vector<long long> high_moments;

  int players() const { return t0 + t1 + ts + tb; }
  int depth() const { return static_cast<int>(low_moments.size()); }
};

// Permitted grid strategies per player, as ascending numerators j (strategy
// j/k^2). An empty `allowed` vector (no players at all) signals that the
// aggregate guess itself is unrealizable.
struct PermittedSets {
  std::vector<std::vector<int>> allowed;

  bool guess_feasible() const { return !allowed.empty(); }
};

// A system of count and power-sum constraints over grid-valued variables:
// variable i ranges over grids[i] (numerators over k2); exactly m0 variables
// must be 0, m1 must be k2, ms must fall in (0,1/2] and match low_moments,
// mb must fall in (1/2,1) and match high_moments. Counts must satisfy
// m0+m1+ms+mb = #variables; all moment targets are exact numerators.
struct MomentSystem {
  int k2 = 0;
  int depth = 0;
  std::vector<std::vector<int>> grids;
  int m0 = 0, m1 = 0, ms = 0, mb = 0;
  std::vector<long long> low_moments;
  std::vector<long long> high_moments;
};

// Lexicographically smallest solution (per-variable numerators), or nullopt
// iff the system has no solution. Layered reachability DP over exact integer
// states with pointer-free greedy reconstruction.
std::optional<std::vector<int>> solve_moment_system(const MomentSystem& sys);

// The others-count view the classifier uses when testing a candidate grid
// strategy: a witness realization of the residual aggregate (the guess minus
// one instance of the candidate).
struct ClassifierView {
  CountDistribution others;  // distribution over {0..n-1}
  std::vector<int> low_witness;   // residual low-side numerators
  std::vector<int> high_witness;  // residual high-side numerators
};

// nullopt when the residual system is unrealizable (for pure candidates this
// means the guess itself is unrealizable). candidate_num in {0..k2}.
std::optional<ClassifierView> classifier_view(const AggregateGuess& guess,
                                              int candidate_num);

// For every player, the grid strategies that pass the best-response test at
// threshold 3*epsilon/4 against the witness view of the guess: one-sided for
// pure candidates, two-sided (approximate indifference) for mixing
// candidates. Returns a guess-infeasible result when the unconditioned
// system has no witness.
PermittedSets permitted_strategies(const AnonymousGame& game,
                                   const AggregateGuess& guess,
                                   const SearchParams& params);

// An assignment of one permitted strategy per player realizing the guess
// exactly (counts and power sums), or nullopt iff none exists.
std::optional<AnonymousProfile> assignment_dp(const PermittedSets& sets,
                                              const AggregateGuess& guess);

struct SearchOutcome {
  AnonymousProfile profile;
  double max_regret = 0.0;
  std::string guess;  // description of the successful guess
};

// Full search: the single-probability case first, then aggregate guesses in
// increasing mixer count and lexicographic moment order; first success wins.
// With verify_output set, candidates are re-checked exactly and only
// returned if max regret <= epsilon.
std::optional<SearchOutcome> moment_search(const AnonymousGame& game,
                                           const SearchParams& params);

// Search over profiles where t players share one mixing probability q =
// i/(kn) and everyone else is pure. Per-player permitted slots are computed
// from exact conditional count distributions; slot feasibility is Hall's
// condition over the 8 subsets of {0, q, 1}. Returns the first feasible
// assignment (an exact epsilon-equilibrium), or nullopt.
std::optional<AnonymousProfile> case2_search(const AnonymousGame& game, int k,
                                             double epsilon);

struct BruteForceBudget {
  int max_players = 6;
  int max_grid = 16;
  long long max_results = -1;  // negative: unlimited
};

// All profiles on the grid of multiples of 1/grid_denominator whose exact
// max regret is <= epsilon, in odometer order. Enforces the budget caps.
std::vector<AnonymousProfile> brute_force_grid_nash(
    const AnonymousGame& game, int grid_denominator, double epsilon,
    const BruteForceBudget& budget = {});

namespace detail {

// Feasibility of assigning every player one slot from its permitted mask
// (bit s set = slot s allowed) with exact per-slot capacities summing to the
// player count: Hall's condition checked over all subsets of slots.
bool slots_feasible(const std::vector<int>& masks,
                    const std::vector<int>& capacities);

// A concrete assignment (slot index per player) when feasible; players are
// processed in order and each takes the lowest slot that keeps the residual
// instance feasible, so the result is deterministic.
std::optional<std::vector<int>> assign_slots(const std::vector<int>& masks,
                                             std::vector<int> capacities);

}  // namespace detail

}  // namespace momentnash

#endif  // MOMENTNASH_MOMENT_SEARCH_HPP_
