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

#include "momentnash/games.hpp"

#include <cmath>

namespace momentnash {

namespace {

constexpr double kProbSumTol = 1e-12;

void check_payoff_range(const Eigen::MatrixXd& m, const char* what) {
  if ((m.array().abs() > 1.0).any()) {
    throw InputError(std::string(what) + ": payoff outside [-1,1]");
  }
}

void check_probability_vector(const Eigen::VectorXd& v, const char* what) {
  if ((v.array() < 0.0).any()) {
    throw InputError(std::string(what) + ": negative probability");
  }
  if (std::abs(v.sum() - 1.0) > kProbSumTol) {
    throw InputError(std::string(what) + ": probabilities do not sum to 1");
  }
}

}  // namespace

BimatrixGame::BimatrixGame(Eigen::MatrixXd row_payoffs,
                           Eigen::MatrixXd col_payoffs)
    : row_(std::move(row_payoffs)), col_(std::move(col_payoffs)) {
  if (row_.rows() != row_.cols() || col_.rows() != col_.cols() ||
      row_.rows() != col_.rows() || row_.rows() < 1) {
    throw InputError("payoff matrices must be square with equal size >= 1");
  }
  check_payoff_range(row_, "row payoffs");
  check_payoff_range(col_, "column payoffs");
}

MixedPair make_mixed_pair(Eigen::VectorXd x, Eigen::VectorXd y) {
  check_probability_vector(x, "x");
  check_probability_vector(y, "y");
  return MixedPair{std::move(x), std::move(y)};
}

MixedPair uniform_pair(int n) {
  if (n < 1) throw InputError("uniform pair requires n >= 1");
  return MixedPair{Eigen::VectorXd::Constant(n, 1.0 / n),
                   Eigen::VectorXd::Constant(n, 1.0 / n)};
}

RegretPair bimatrix_regret(const BimatrixGame& game, const MixedPair& pair,
                           RegretKind kind, double support_tol) {
  const int n = game.size();
  if (pair.x.size() != n || pair.y.size() != n) {
    throw InputError("strategy dimensions do not match the game");
  }
  const Eigen::VectorXd row_values = game.row_payoffs() * pair.y;
  const Eigen::VectorXd col_values = game.col_payoffs().transpose() * pair.x;
  const double row_best = row_values.maxCoeff();
  const double col_best = col_values.maxCoeff();

  RegretPair regret;
  if (kind == RegretKind::kExpectedPayoff) {
    regret.row = std::max(0.0, row_best - pair.x.dot(row_values));
    regret.col = std::max(0.0, col_best - pair.y.dot(col_values));
    return regret;
  }
  for (int i = 0; i < n; ++i) {
    if (pair.x[i] > support_tol) {
      regret.row = std::max(regret.row, row_best - row_values[i]);
    }
    if (pair.y[i] > support_tol) {
      regret.col = std::max(regret.col, col_best - col_values[i]);
    }
  }
  return regret;
}

AnonymousGame AnonymousGame::from_tables(std::vector<PlayerUtility> utilities) {
  AnonymousGame game;
  game.players_ = static_cast<int>(utilities.size());
  if (game.players_ < 1) throw InputError("anonymous game needs >= 1 player");
  for (const PlayerUtility& u : utilities) {
    if (u.u0.size() != game.players_ || u.u1.size() != game.players_) {
      throw InputError("utility tables must have length n");
    }
    if ((u.u0.array().abs() > 1.0).any() || (u.u1.array().abs() > 1.0).any()) {
      throw InputError("utility outside [-1,1]");
    }
  }
  game.tables_ = std::move(utilities);
  return game;
}

AnonymousGame AnonymousGame::from_gp(GpPayoffs payoffs) {
  if (payoffs.k < 1 || payoffs.p.size() != payoffs.k) {
    throw InputError("typed game needs k >= 1 target probabilities");
  }
  if (!(payoffs.delta > 0.0) || payoffs.delta > 0.5) {
    throw InputError("delta must lie in (0, 1/2]");
  }
  for (int i = 0; i < payoffs.k; ++i) {
    const double p = payoffs.p[i];
    if (!(p >= 3.0 * payoffs.delta * payoffs.k && p <= 1.0)) {
      throw InputError("target probabilities must lie in [3*delta*k, 1]");
    }
  }
  AnonymousGame game;
  game.players_ = payoffs.k + 2;
  game.gp_ = std::move(payoffs);
  return game;
}

const std::vector<PlayerUtility>& AnonymousGame::tables() const {
  if (gp_) throw InputError("typed game has no count-indexed tables");
  return tables_;
}

Eigen::Vector2d AnonymousGame::expected_utilities(const Eigen::VectorXd& q,
                                                  int i) const {
  if (q.size() != players_) throw InputError("profile length mismatch");
  if (i < 0 || i >= players_) throw InputError("player index out of range");

  if (!gp_) {
    const CountDistribution others =
        others_count_distribution(AnonymousProfile{q}, i);
    const PlayerUtility& u = tables_[i];
    return {others.pmf().dot(u.u0), others.pmf().dot(u.u1)};
  }

  // Typed family: expectations factor over the independent events "B plays
  // 1", "C plays 1", and the type-A behavior, so each term is closed-form.
  const GpPayoffs& gp = *gp_;
  const int k = gp.k;
  const double q_b = q[k];
  const double q_c = q[k + 1];
  const double type_a_sum = q.head(k).sum();
  const double mu = gp.target_sum();
  if (i < k) {
    const double mu_minus_i = mu - gp.p[i];
    const double others_sum = type_a_sum - q[i];
    const double both_zero = (1.0 - q_b) * (1.0 - q_c);
    const double u0 = (mu_minus_i * both_zero - gp.delta * k * q_c) / k;
    const double u1 = (others_sum * both_zero - gp.delta * k * q_b) / k;
    return {u0, u1};
  }
  if (i == k) {  // player B
    return {2.0 * gp.delta, (type_a_sum - mu) / k};
  }
  // player C
  return {2.0 * gp.delta, (mu - type_a_sum) / k};
}

AnonymousProfile make_anonymous_profile(Eigen::VectorXd q) {
  if ((q.array() < 0.0).any() || (q.array() > 1.0).any()) {
    throw InputError("profile probabilities must lie in [0,1]");
  }
  return AnonymousProfile{std::move(q)};
}

Eigen::VectorXd anonymous_regret(const AnonymousGame& game,
                                 const AnonymousProfile& profile,
                                 double support_tol) {
  const int n = game.players();
  if (profile.q.size() != n) throw InputError("profile length mismatch");
  Eigen::VectorXd regrets = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d u = game.expected_utilities(profile.q, i);
    double r = 0.0;
    if (1.0 - profile.q[i] > support_tol) r = std::max(r, u[1] - u[0]);
    if (profile.q[i] > support_tol) r = std::max(r, u[0] - u[1]);
    regrets[i] = r;
  }
  return regrets;
}

CountDistribution others_count_distribution(const AnonymousProfile& profile,
                                            int i,
                                            std::optional<double> own_override) {
  const int n = static_cast<int>(profile.q.size());
  if (i < 0 || i >= n) throw InputError("player index out of range");
  Eigen::VectorXd q = profile.q;
  if (own_override) {
    if (*own_override < 0.0 || *own_override > 1.0) {
      throw InputError("override probability outside [0,1]");
    }
    q[i] = *own_override;
  }
  Eigen::VectorXd others(n - 1);
  int out = 0;
  for (int j = 0; j < n; ++j) {
    if (j != i) others[out++] = q[j];
  }
  return pbd_pmf(IndicatorCollection(std::move(others)));
}

}  // namespace momentnash
