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

#include "momentnash/moment_search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "momentnash/detail/moment_reach.hpp"

namespace momentnash {

using detail::DigitLayout;
using detail::UniformReach;
using detail::big_numerators;
using detail::is_big_num;
using detail::is_small_num;
using detail::pow_checked;
using detail::small_numerators;

namespace {

void validate_guess(const AggregateGuess& guess) {
  if (guess.k2 < 4) throw InputError("guess requires k^2 >= 4");
  if (guess.t0 < 0 || guess.t1 < 0 || guess.ts < 0 || guess.tb < 0) {
    throw InputError("guess counts must be nonnegative");
  }
  if (guess.high_moments.size() != guess.low_moments.size()) {
    throw InputError("moment vectors must share the depth");
  }
  for (long long m : guess.low_moments) {
    if (m < 0) throw InputError("negative moment target");
  }
  for (long long m : guess.high_moments) {
    if (m < 0) throw InputError("negative moment target");
  }
}

}  // namespace

SearchParams structural_params(double epsilon, double c,
                               std::optional<int> k_override,
                               std::optional<int> d_override) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw InputError("epsilon must lie in (0,1]");
  }
  if (!(c > 0.0)) throw InputError("structural constant must be positive");
  SearchParams params;
  params.epsilon = epsilon;
  params.c = c;
  params.k = k_override ? *k_override
                        : 2 * static_cast<int>(std::ceil(c / epsilon));
  params.d = d_override
                 ? *d_override
                 : static_cast<int>(std::ceil(3.0 * std::log2(320.0 / epsilon)));
  if (params.k < 2) throw InputError("grid parameter k must be >= 2");
  if (params.d < 1) throw InputError("moment depth d must be >= 1");
  return params;
}

std::optional<std::vector<int>> solve_moment_system(const MomentSystem& sys) {
  const int m = static_cast<int>(sys.grids.size());
  if (sys.k2 < 2) throw InputError("system requires k^2 >= 2");
  if (sys.depth < 0 ||
      sys.low_moments.size() != static_cast<size_t>(sys.depth) ||
      sys.high_moments.size() != static_cast<size_t>(sys.depth)) {
    throw InputError("moment target vectors must have length depth");
  }
  if (sys.m0 < 0 || sys.m1 < 0 || sys.ms < 0 || sys.mb < 0 ||
      sys.m0 + sys.m1 + sys.ms + sys.mb != m) {
    throw InputError(
        "slot counts must be nonnegative and sum to the variable count");
  }
  for (long long t : sys.low_moments) {
    if (t < 0) throw InputError("moment targets must be nonnegative");
  }
  for (long long t : sys.high_moments) {
    if (t < 0) throw InputError("moment targets must be nonnegative");
  }
  for (const std::vector<int>& grid : sys.grids) {
    for (int j : grid) {
      if (j < 0 || j > sys.k2) throw InputError("grid numerator out of range");
    }
  }

  // State digits: (z0, z1, zs, zb, low power sums, high power sums), capped
  // by the targets themselves since every contribution is nonnegative.
  std::vector<long long> caps = {sys.m0, sys.m1, sys.ms, sys.mb};
  caps.insert(caps.end(), sys.low_moments.begin(), sys.low_moments.end());
  caps.insert(caps.end(), sys.high_moments.begin(), sys.high_moments.end());
  const DigitLayout layout(std::move(caps));

  std::vector<std::vector<long long>> contributions(sys.k2 + 1);
  for (int j = 0; j <= sys.k2; ++j) {
    std::vector<long long> digits(layout.digits(), 0);
    if (j == 0) {
      digits[0] = 1;
    } else if (j == sys.k2) {
      digits[1] = 1;
    } else if (is_small_num(j, sys.k2)) {
      digits[2] = 1;
      for (int l = 0; l < sys.depth; ++l) digits[4 + l] = pow_checked(j, l + 1);
    } else {
      digits[3] = 1;
      for (int l = 0; l < sys.depth; ++l) {
        digits[4 + sys.depth + l] = pow_checked(j, l + 1);
      }
    }
    contributions[j] = std::move(digits);
  }
  const auto contribution = [&](int j) -> const std::vector<long long>& {
    return contributions[j];
  };

  // Forward reachability, one layer per variable.
  std::vector<std::unordered_set<std::uint64_t>> forward(m + 1);
  forward[0].insert(0);
  long long stored = 1;
  for (int i = 0; i < m; ++i) {
    for (std::uint64_t key : forward[i]) {
      const std::vector<long long> digits = layout.unpack(key);
      for (int j : sys.grids[i]) {
        std::vector<long long> moved = digits;
        const std::vector<long long>& c = contribution(j);
        for (size_t l = 0; l < moved.size(); ++l) moved[l] += c[l];
        if (!layout.within_caps(moved)) continue;
        if (forward[i + 1].insert(layout.pack(moved)).second) {
          if (++stored > detail::kStateBudget) {
            throw ResourceError("moment system DP exceeds state budget");
          }
        }
      }
    }
  }

  std::vector<long long> target = {sys.m0, sys.m1, sys.ms, sys.mb};
  target.insert(target.end(), sys.low_moments.begin(), sys.low_moments.end());
  target.insert(target.end(), sys.high_moments.begin(),
                sys.high_moments.end());
  const std::uint64_t target_key = layout.pack(target);
  if (forward[m].count(target_key) == 0) return std::nullopt;

  // Suffix feasibility: states from which the target remains reachable.
  std::vector<std::unordered_set<std::uint64_t>> backward(m + 1);
  backward[m].insert(target_key);
  for (int i = m - 1; i >= 0; --i) {
    for (std::uint64_t key : forward[i]) {
      const std::vector<long long> digits = layout.unpack(key);
      for (int j : sys.grids[i]) {
        std::vector<long long> moved = digits;
        const std::vector<long long>& c = contribution(j);
        for (size_t l = 0; l < moved.size(); ++l) moved[l] += c[l];
        if (!layout.within_caps(moved)) continue;
        if (backward[i + 1].count(layout.pack(moved)) > 0) {
          backward[i].insert(key);
          break;
        }
      }
    }
  }
  if (backward[0].count(0) == 0) return std::nullopt;

  // Greedy reconstruction: the smallest value that keeps the suffix feasible
  // yields the lexicographically smallest solution.
  std::vector<int> solution;
  solution.reserve(m);
  std::vector<long long> state(layout.digits(), 0);
  for (int i = 0; i < m; ++i) {
    std::vector<int> ordered = sys.grids[i];
    std::sort(ordered.begin(), ordered.end());
    bool advanced = false;
    for (int j : ordered) {
      std::vector<long long> moved = state;
      const std::vector<long long>& c = contribution(j);
      for (size_t l = 0; l < moved.size(); ++l) moved[l] += c[l];
      if (!layout.within_caps(moved)) continue;
      if (backward[i + 1].count(layout.pack(moved)) > 0) {
        solution.push_back(j);
        state = std::move(moved);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InternalError("feasible prefix lost its witness");
  }
  return solution;
}

namespace {

// The classifier's candidate view, computed against shared reachability
// caches. nullopt when the candidate cannot be realized within the guess.
std::optional<ClassifierView> candidate_view(const AggregateGuess& guess,
                                             int candidate,
                                             const UniformReach& small_reach,
                                             const UniformReach& big_reach) {
  const int k2 = guess.k2;
  const int depth = guess.depth();
  std::vector<long long> low_target = guess.low_moments;
  std::vector<long long> high_target = guess.high_moments;
  int low_count = guess.ts;
  int high_count = guess.tb;
  int shift = guess.t1;

  if (candidate == 0) {
    if (guess.t0 < 1) return std::nullopt;
  } else if (candidate == k2) {
    if (guess.t1 < 1) return std::nullopt;
    shift = guess.t1 - 1;
  } else if (is_small_num(candidate, k2)) {
    if (guess.ts < 1) return std::nullopt;
    low_count = guess.ts - 1;
    for (int l = 0; l < depth; ++l) {
      low_target[l] -= pow_checked(candidate, l + 1);
      if (low_target[l] < 0) return std::nullopt;
    }
  } else if (is_big_num(candidate, k2)) {
    if (guess.tb < 1) return std::nullopt;
    high_count = guess.tb - 1;
    for (int l = 0; l < depth; ++l) {
      high_target[l] -= pow_checked(candidate, l + 1);
      if (high_target[l] < 0) return std::nullopt;
    }
  } else {
    throw InputError("candidate numerator out of range");
  }

  const auto low_witness = small_reach.witness(low_target, low_count);
  if (!low_witness) return std::nullopt;
  const auto high_witness = big_reach.witness(high_target, high_count);
  if (!high_witness) return std::nullopt;

  Eigen::VectorXd probs(low_witness->size() + high_witness->size());
  int out = 0;
  for (int j : *low_witness) probs[out++] = static_cast<double>(j) / k2;
  for (int j : *high_witness) probs[out++] = static_cast<double>(j) / k2;
  const CountDistribution mixer_sum = pbd_pmf(IndicatorCollection(probs));

  const int n = guess.players();
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(n);
  for (int m = 0; m <= mixer_sum.max_count(); ++m) {
    padded[m + shift] = mixer_sum.pmf()[m];
  }
  return ClassifierView{CountDistribution(std::move(padded)), *low_witness,
                        *high_witness};
}

PermittedSets permitted_strategies_impl(const AnonymousGame& game,
                                        const AggregateGuess& guess,
                                        const SearchParams& params,
                                        const UniformReach& small_reach,
                                        const UniformReach& big_reach) {
  const int n = game.players();
  const int k2 = guess.k2;
  const double threshold = 0.75 * params.epsilon;

  // Unconditioned system first: no witness means no assignment realizes the
  // guess at all, so the whole guess is pruned.
  if (!small_reach.achievable(guess.low_moments, guess.ts) ||
      !big_reach.achievable(guess.high_moments, guess.tb)) {
    return PermittedSets{};
  }

  struct CandidateTest {
    int num;
    Eigen::VectorXd others;  // padded pmf over {0..n-1}
    bool two_sided;
  };
  std::vector<CandidateTest> tests;
  tests.reserve(k2 + 1);
  for (int j = 0; j <= k2; ++j) {
    auto view = candidate_view(guess, j, small_reach, big_reach);
    if (!view) continue;
    const bool two_sided = (j != 0 && j != k2);
    tests.push_back(CandidateTest{j, view->others.pmf(), two_sided});
  }

  PermittedSets sets;
  sets.allowed.resize(n);
  for (int i = 0; i < n; ++i) {
    const PlayerUtility& u = game.tables()[i];
    for (const CandidateTest& test : tests) {
      const double u0 = test.others.dot(u.u0);
      const double u1 = test.others.dot(u.u1);
      bool include;
      if (test.two_sided) {
        include = std::abs(u0 - u1) <= threshold + kFloatSlack;
      } else if (test.num == 0) {
        include = u0 >= u1 - threshold - kFloatSlack;
      } else {
        include = u1 >= u0 - threshold - kFloatSlack;
      }
      if (include) sets.allowed[i].push_back(test.num);
    }
  }
  return sets;
}

std::string describe_guess(const AggregateGuess& guess) {
  std::ostringstream out;
  out << "t0=" << guess.t0 << " t1=" << guess.t1 << " ts=" << guess.ts
      << " tb=" << guess.tb << " k2=" << guess.k2 << " mu=[";
  for (size_t l = 0; l < guess.low_moments.size(); ++l) {
    if (l) out << ",";
    out << guess.low_moments[l];
  }
  out << "] mu'=[";
  for (size_t l = 0; l < guess.high_moments.size(); ++l) {
    if (l) out << ",";
    out << guess.high_moments[l];
  }
  out << "]";
  return out.str();
}

}  // namespace

std::optional<ClassifierView> classifier_view(const AggregateGuess& guess,
                                              int candidate_num) {
  validate_guess(guess);
  const int depth = guess.depth();
  const UniformReach small_reach(small_numerators(guess.k2), depth, guess.ts);
  const UniformReach big_reach(big_numerators(guess.k2), depth, guess.tb);
  return candidate_view(guess, candidate_num, small_reach, big_reach);
}

PermittedSets permitted_strategies(const AnonymousGame& game,
                                   const AggregateGuess& guess,
                                   const SearchParams& params) {
  validate_guess(guess);
  if (!game.count_based()) {
    throw InputError("moment search requires count-indexed utilities");
  }
  if (guess.players() != game.players()) {
    throw InputError("guess counts must sum to the player count");
  }
  if (guess.k2 != params.k * params.k) {
    throw InputError("guess grid disagrees with the search parameters");
  }
  const int depth = guess.depth();
  const UniformReach small_reach(small_numerators(guess.k2), depth, guess.ts);
  const UniformReach big_reach(big_numerators(guess.k2), depth, guess.tb);
  return permitted_strategies_impl(game, guess, params, small_reach,
                                   big_reach);
}

std::optional<AnonymousProfile> assignment_dp(const PermittedSets& sets,
                                              const AggregateGuess& guess) {
  validate_guess(guess);
  const int n = guess.players();
  if (static_cast<int>(sets.allowed.size()) != n) {
    throw InputError("permitted sets must cover every player");
  }
  for (const std::vector<int>& allowed : sets.allowed) {
    if (allowed.empty()) return std::nullopt;
  }
  MomentSystem sys;
  sys.k2 = guess.k2;
  sys.depth = guess.depth();
  sys.grids = sets.allowed;
  sys.m0 = guess.t0;
  sys.m1 = guess.t1;
  sys.ms = guess.ts;
  sys.mb = guess.tb;
  sys.low_moments = guess.low_moments;
  sys.high_moments = guess.high_moments;
  const auto solution = solve_moment_system(sys);
  if (!solution) return std::nullopt;
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) {
    q[i] = static_cast<double>((*solution)[i]) / guess.k2;
  }
  return make_anonymous_profile(std::move(q));
}

namespace detail {

namespace {

bool feasible_from_counts(const std::vector<long long>& mask_counts,
                          const std::vector<int>& capacities) {
  const int slots = static_cast<int>(capacities.size());
  const int subsets = 1 << slots;
  for (int subset = 0; subset < subsets; ++subset) {
    long long demand = 0;
    for (int mask = 0; mask < subsets; ++mask) {
      if ((mask & ~subset) == 0) demand += mask_counts[mask];
    }
    long long capacity = 0;
    for (int s = 0; s < slots; ++s) {
      if (subset & (1 << s)) capacity += capacities[s];
    }
    if (demand > capacity) return false;
  }
  return true;
}

}  // namespace

bool slots_feasible(const std::vector<int>& masks,
                    const std::vector<int>& capacities) {
  const int slots = static_cast<int>(capacities.size());
  if (slots < 1 || slots > 16) throw InputError("unsupported slot count");
  long long total = 0;
  for (int c : capacities) {
    if (c < 0) throw InputError("negative capacity");
    total += c;
  }
  if (total != static_cast<long long>(masks.size())) {
    throw InputError("capacities must sum to the player count");
  }
  std::vector<long long> mask_counts(1 << slots, 0);
  for (int mask : masks) {
    if (mask < 0 || mask >= (1 << slots)) throw InputError("bad slot mask");
    ++mask_counts[mask];
  }
  return feasible_from_counts(mask_counts, capacities);
}

std::optional<std::vector<int>> assign_slots(const std::vector<int>& masks,
                                             std::vector<int> capacities) {
  if (!slots_feasible(masks, capacities)) return std::nullopt;
  const int slots = static_cast<int>(capacities.size());
  std::vector<long long> mask_counts(1 << slots, 0);
  for (int mask : masks) ++mask_counts[mask];

  std::vector<int> assignment(masks.size(), -1);
  for (size_t i = 0; i < masks.size(); ++i) {
    --mask_counts[masks[i]];
    for (int s = 0; s < slots; ++s) {
      if (!(masks[i] & (1 << s)) || capacities[s] == 0) continue;
      --capacities[s];
      if (feasible_from_counts(mask_counts, capacities)) {
        assignment[i] = s;
        break;
      }
      ++capacities[s];
    }
    if (assignment[i] < 0) {
      throw InternalError("feasible slot instance lost its assignment");
    }
  }
  return assignment;
}

}  // namespace detail

namespace {

// Expected utilities of player i when the count of others playing 1 is a
// fixed shift plus a sum of independent q-indicators.
std::pair<double, double> shifted_utilities(const PlayerUtility& u,
                                            const Eigen::VectorXd& mixer_pmf,
                                            int shift) {
  double u0 = 0.0, u1 = 0.0;
  for (int m = 0; m < mixer_pmf.size(); ++m) {
    u0 += mixer_pmf[m] * u.u0[m + shift];
    u1 += mixer_pmf[m] * u.u1[m + shift];
  }
  return {u0, u1};
}

std::optional<AnonymousProfile> try_shared_probability(
    const AnonymousGame& game, double epsilon, int t0, int t1, int t,
    double q) {
  const int n = game.players();

  // Exact conditional count distributions of the other players, one per slot
  // the tested player might occupy.
  Eigen::VectorXd bin_t = Eigen::VectorXd::Ones(1);
  Eigen::VectorXd bin_t_minus_1 = Eigen::VectorXd::Ones(1);
  if (t >= 1) {
    bin_t = pbd_pmf(IndicatorCollection(Eigen::VectorXd::Constant(t, q))).pmf();
    bin_t_minus_1 =
        pbd_pmf(IndicatorCollection(Eigen::VectorXd::Constant(t - 1, q)))
            .pmf();
  }

  std::vector<int> masks(n, 0);
  for (int i = 0; i < n; ++i) {
    const PlayerUtility& u = game.tables()[i];
    if (t0 >= 1) {
      const auto [u0, u1] = shifted_utilities(u, bin_t, t1);
      if (u0 >= u1 - epsilon - kFloatSlack) masks[i] |= 1;
    }
    if (t >= 1) {
      const auto [u0, u1] = shifted_utilities(u, bin_t_minus_1, t1);
      if (std::abs(u0 - u1) <= epsilon + kFloatSlack) masks[i] |= 2;
    }
    if (t1 >= 1) {
      const auto [u0, u1] = shifted_utilities(u, bin_t, t1 - 1);
      if (u1 >= u0 - epsilon - kFloatSlack) masks[i] |= 4;
    }
    if (masks[i] == 0) return std::nullopt;
  }

  const auto assignment = detail::assign_slots(masks, {t0, t, t1});
  if (!assignment) return std::nullopt;
  Eigen::VectorXd profile(n);
  for (int i = 0; i < n; ++i) {
    profile[i] =
        (*assignment)[i] == 0 ? 0.0 : ((*assignment)[i] == 1 ? q : 1.0);
  }
  return make_anonymous_profile(std::move(profile));
}

}  // namespace

std::optional<AnonymousProfile> case2_search(const AnonymousGame& game, int k,
                                             double epsilon) {
  if (!game.count_based()) {
    throw InputError(
        "shared-probability search requires count-indexed utilities");
  }
  if (k < 1) throw InputError("grid parameter must be >= 1");
  const int n = game.players();
  const long long kn = static_cast<long long>(k) * n;
  for (int t0 = 0; t0 <= n; ++t0) {
    for (int t1 = 0; t1 + t0 <= n; ++t1) {
      const int t = n - t0 - t1;
      if (t == 0) {
        if (auto p = try_shared_probability(game, epsilon, t0, t1, 0, 0.0)) {
          return p;
        }
        continue;
      }
      for (long long qnum = 1; qnum < kn; ++qnum) {
        const double q = static_cast<double>(qnum) / static_cast<double>(kn);
        if (auto p = try_shared_probability(game, epsilon, t0, t1, t, q)) {
          return p;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SearchOutcome> moment_search(const AnonymousGame& game,
                                           const SearchParams& params) {
  if (!game.count_based()) {
    throw InputError("moment search requires count-indexed utilities");
  }
  if (!(params.epsilon > 0.0 && params.epsilon <= 1.0)) {
    throw InputError("epsilon must lie in (0,1]");
  }
  if (params.k < 2) throw InputError("grid parameter k must be >= 2");
  if (params.d < 1) throw InputError("moment depth d must be >= 1");

  const int n = game.players();

  // The structural split guarantees an epsilon/2 solution either with one
  // shared mixing probability on the 1/(kn) grid or with few mixers on the
  // 1/k^2 grid; the shared-probability case goes first.
  if (auto shared = case2_search(game, params.k, params.epsilon / 2.0)) {
    const double regret = anonymous_regret(game, *shared).maxCoeff();
    if (!params.verify_output || regret <= params.epsilon + kFloatSlack) {
      return SearchOutcome{std::move(*shared), regret, "shared-probability"};
    }
  }

  const int k2 = params.k * params.k;
  const int mixer_cap = static_cast<int>(
      std::min<long long>(n, static_cast<long long>(params.k) * params.k *
                                 params.k));
  const UniformReach small_reach(small_numerators(k2), params.d, mixer_cap);
  const UniformReach big_reach(big_numerators(k2), params.d, mixer_cap);

  std::vector<std::vector<std::vector<long long>>> low_targets(mixer_cap + 1);
  std::vector<std::vector<std::vector<long long>>> high_targets(mixer_cap + 1);
  for (int c = 0; c <= mixer_cap; ++c) {
    low_targets[c] = small_reach.targets(c);
    high_targets[c] = big_reach.targets(c);
  }

  // Deterministic guess order: increasing total mixer count, low mixers
  // before high, then pure-zero count, then lexicographic moment vectors.
  for (int total = 0; total <= mixer_cap; ++total) {
    for (int tb = 0; tb <= total; ++tb) {
      const int ts = total - tb;
      if (low_targets[ts].empty() || high_targets[tb].empty()) continue;
      for (int t0 = 0; t0 + total <= n; ++t0) {
        const int t1 = n - total - t0;
        for (const std::vector<long long>& low : low_targets[ts]) {
          for (const std::vector<long long>& high : high_targets[tb]) {
            AggregateGuess guess;
            guess.k2 = k2;
            guess.t0 = t0;
            guess.t1 = t1;
            guess.ts = ts;
            guess.tb = tb;
            guess.low_moments = low;
            guess.high_moments = high;
            const PermittedSets sets = permitted_strategies_impl(
                game, guess, params, small_reach, big_reach);
            if (!sets.guess_feasible()) continue;
            bool all_nonempty = true;
            for (const std::vector<int>& allowed : sets.allowed) {
              if (allowed.empty()) {
                all_nonempty = false;
                break;
              }
            }
            if (!all_nonempty) continue;
            auto profile = assignment_dp(sets, guess);
            if (!profile) continue;
            const double regret = anonymous_regret(game, *profile).maxCoeff();
            if (params.verify_output &&
                regret > params.epsilon + kFloatSlack) {
              continue;
            }
            return SearchOutcome{std::move(*profile), regret,
                                 describe_guess(guess)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<AnonymousProfile> brute_force_grid_nash(
    const AnonymousGame& game, int grid_denominator, double epsilon,
    const BruteForceBudget& budget) {
  if (grid_denominator < 1) throw InputError("grid denominator must be >= 1");
  const int n = game.players();
  if (n > budget.max_players || grid_denominator > budget.max_grid) {
    throw ResourceError("grid enumeration exceeds the configured budget");
  }

  std::vector<AnonymousProfile> found;
  std::vector<int> digits(n, 0);
  Eigen::VectorXd q(n);
  const double tol = epsilon + 1e-12;
  while (true) {
    for (int i = 0; i < n; ++i) {
      q[i] = static_cast<double>(digits[i]) / grid_denominator;
    }
    bool is_equilibrium = true;
    for (int i = 0; i < n && is_equilibrium; ++i) {
      const Eigen::Vector2d u = game.expected_utilities(q, i);
      if (1.0 - q[i] > kSupportTol && u[1] - u[0] > tol) is_equilibrium = false;
      if (q[i] > kSupportTol && u[0] - u[1] > tol) is_equilibrium = false;
    }
    if (is_equilibrium) {
      found.push_back(AnonymousProfile{q});
      if (budget.max_results >= 0 &&
          static_cast<long long>(found.size()) >= budget.max_results) {
        return found;
      }
    }
    int pos = n - 1;
    while (pos >= 0 && digits[pos] == grid_denominator) {
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[pos];
  }
  return found;
}

}  // namespace momentnash
