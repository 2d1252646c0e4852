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
// Game representations, mixed profiles, and exact regret verification for
// bimatrix games and two-strategy anonymous games. All types are immutable
// after construction and all operations are pure functions.

#ifndef MOMENTNASH_GAMES_HPP_
#define MOMENTNASH_GAMES_HPP_

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "momentnash/common.hpp"
#include "momentnash/indicator_sums.hpp"

namespace momentnash {

// Two-player game in normalized payoffs: R and C are n x n with entries in
// [-1, 1].
class BimatrixGame {
 public:
  BimatrixGame(Eigen::MatrixXd row_payoffs, Eigen::MatrixXd col_payoffs);

  int size() const { return static_cast<int>(row_.rows()); }
  const Eigen::MatrixXd& row_payoffs() const { return row_; }
  const Eigen::MatrixXd& col_payoffs() const { return col_; }

 private:
  Eigen::MatrixXd row_, col_;
};

// A pair of mixed strategies; each vector is nonnegative and sums to 1
// within 1e-12.
struct MixedPair {
  Eigen::VectorXd x;
  Eigen::VectorXd y;
};

MixedPair make_mixed_pair(Eigen::VectorXd x, Eigen::VectorXd y);
MixedPair uniform_pair(int n);

// Regret notion. WellSupported is the default everywhere: the regret of a
// strategy pair is the worst gap, over pure strategies played with positive
// probability, between the best response value and that strategy's value.
// ExpectedPayoff is the looser notion (best response value minus realized
// expected payoff), kept as an alternative mode for sampling experiments.
enum class RegretKind { kWellSupported, kExpectedPayoff };

struct RegretPair {
  double row = 0.0;
  double col = 0.0;
  double max() const { return row > col ? row : col; }
};

// Both regrets are >= 0; the pair is an epsilon-Nash equilibrium (in the
// chosen sense) iff max(row, col) <= epsilon.
RegretPair bimatrix_regret(const BimatrixGame& game, const MixedPair& pair,
                           RegretKind kind = RegretKind::kWellSupported,
                           double support_tol = kSupportTol);

// Count-indexed utilities of one player: u0[k] (resp. u1[k]) is the payoff
// for playing 0 (resp. 1) when k of the other players play 1. Both vectors
// have length n and entries in [-1, 1].
struct PlayerUtility {
  Eigen::VectorXd u0;
  Eigen::VectorXd u1;
};

// Payoff structure of the prescribed-equilibrium family: k players of type A
// with target mixing probabilities p_1..p_k, plus single players B and C that
// penalize the type-A aggregate for drifting away from sum(p). The payoffs of
// A players depend on which of B and C play 1, which a pure count-indexed
// table cannot express, so games of this family carry this structure instead
// of tables and expected utilities are evaluated from it in closed form.
struct GpPayoffs {
  int k = 0;
  double delta = 0.0;
  Eigen::VectorXd p;  // length k, each p_i in [3*delta*k, 1]

  double target_sum() const { return p.sum(); }
};

// Two-strategy anonymous game over n players. Either every player has a
// count-indexed utility table, or the game is a typed prescribed-equilibrium
// instance (see GpPayoffs). Player order for typed games: the k type-A
// players first, then B, then C.
class AnonymousGame {
 public:
  static AnonymousGame from_tables(std::vector<PlayerUtility> utilities);
  static AnonymousGame from_gp(GpPayoffs payoffs);

  int players() const { return players_; }
  bool count_based() const { return !gp_.has_value(); }

  // Count-indexed tables; throws InputError for typed games.
  const std::vector<PlayerUtility>& tables() const;
  const GpPayoffs* gp() const { return gp_ ? &*gp_ : nullptr; }

  // (E[u_i(0, K_-i)], E[u_i(1, K_-i)]) under the product profile q, where
  // K_-i counts the other players playing 1.
  Eigen::Vector2d expected_utilities(const Eigen::VectorXd& q, int i) const;

 private:
  AnonymousGame() = default;
  int players_ = 0;
  std::vector<PlayerUtility> tables_;
  std::optional<GpPayoffs> gp_;
};

// q_i in [0,1] is the probability that player i plays strategy 1.
struct AnonymousProfile {
  Eigen::VectorXd q;
};

AnonymousProfile make_anonymous_profile(Eigen::VectorXd q);

// Per-player well-supported regrets: entry i is the worst gap, over own
// strategies s played with probability above support_tol, between the payoff
// of the best reply and the payoff of s, clamped at zero.
Eigen::VectorXd anonymous_regret(const AnonymousGame& game,
                                 const AnonymousProfile& profile,
                                 double support_tol = kSupportTol);

// Exact distribution of sum_{j != i} X_j with X_j ~ Bernoulli(q_j). If
// `own_override` is given it replaces q_i before player i is excluded, so a
// caller may pass a profile whose i-th slot is undecided.
CountDistribution others_count_distribution(
    const AnonymousProfile& profile, int i,
    std::optional<double> own_override = std::nullopt);

}  // namespace momentnash

#endif  // MOMENTNASH_GAMES_HPP_
