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

#include "momentnash/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "momentnash/hard_instances.hpp"
#include "momentnash/io.hpp"
#include "momentnash/moment_search.hpp"
#include "momentnash/sparse_cover.hpp"

namespace momentnash {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceError = 3;

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

int thread_count() {
  const char* env = std::getenv("MOMENTNASH_THREADS");
  if (!env) return 1;
  const int threads = std::atoi(env);
  if (threads < 1) throw InputError("MOMENTNASH_THREADS must be >= 1");
  return threads;
}

// Runs `run(cell)` for every index in [0, cells), sharded over the
// configured threads; results land in a vector indexed by cell, so output
// order never depends on scheduling.
template <typename Fn>
void for_each_cell(int cells, Fn run) {
  const int threads = std::min(thread_count(), std::max(cells, 1));
  if (threads <= 1) {
    for (int cell = 0; cell < cells; ++cell) run(cell);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&]() {
      for (int cell = next.fetch_add(1); cell < cells;
           cell = next.fetch_add(1)) {
        run(cell);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

void emit(std::ostream& out, const Json& value) { out << value.dump(2) << "\n"; }

void maybe_write(const std::string& path, const Json& value) {
  if (!path.empty()) write_json_file(path, value);
}

IndicatorCollection collection_from_doubles(const std::vector<double>& probs) {
  Eigen::VectorXd v(probs.size());
  for (size_t i = 0; i < probs.size(); ++i) v[i] = probs[i];
  return IndicatorCollection(std::move(v));
}

Json pmf_json(const CountDistribution& dist) {
  Json values = Json::array();
  for (int m = 0; m <= dist.max_count(); ++m) values.push_back(dist.pmf()[m]);
  return values;
}

int run_verify(const std::string& game_path, const std::string& profile_path,
               double epsilon, bool expected_payoff, std::ostream& out) {
  const Json game_json = load_json_file(game_path);
  const Json profile_json = load_json_file(profile_path);
  const RegretKind kind = expected_payoff ? RegretKind::kExpectedPayoff
                                          : RegretKind::kWellSupported;
  Json result;
  double max_regret = 0.0;
  if (looks_like_bimatrix(game_json)) {
    const BimatrixGame game = bimatrix_from_json(game_json);
    const MixedPair pair = mixed_pair_from_json(profile_json);
    const RegretPair regret = bimatrix_regret(game, pair, kind);
    max_regret = regret.max();
    result["row_regret"] = regret.row;
    result["col_regret"] = regret.col;
  } else {
    const AnonymousGame game = anonymous_from_json(game_json);
    const AnonymousProfile profile = anonymous_profile_from_json(profile_json);
    const Eigen::VectorXd regrets = anonymous_regret(game, profile);
    max_regret = regrets.size() ? regrets.maxCoeff() : 0.0;
    Json per_player = Json::array();
    for (int i = 0; i < regrets.size(); ++i) per_player.push_back(regrets[i]);
    result["regrets"] = std::move(per_player);
  }
  result["max_regret"] = max_regret;
  result["epsilon"] = epsilon;
  const bool ok = max_regret <= epsilon + kFloatSlack;
  result["is_equilibrium"] = ok;
  emit(out, result);
  return ok ? kExitSuccess : kExitNotFound;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"approximate equilibria for anonymous and bimatrix games"};
  app.require_subcommand(1);

  // Handlers stash a callable here; it runs after parsing succeeds.
  std::function<int()> action;

  // verify ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand("verify", "check a profile against a game");
    auto game_path = std::make_shared<std::string>();
    auto profile_path = std::make_shared<std::string>();
    auto epsilon = std::make_shared<double>(0.0);
    auto expected = std::make_shared<bool>(false);
    cmd->add_option("--game", *game_path, "game JSON")->required();
    cmd->add_option("--profile", *profile_path, "profile JSON")->required();
    cmd->add_option("--epsilon", *epsilon, "tolerance")->required();
    cmd->add_flag("--expected-payoff", *expected,
                  "use expected-payoff regret instead of well-supported");
    cmd->callback([&action, game_path, profile_path, epsilon, expected,
                   &out]() {
      action = [=, &out]() {
        return run_verify(*game_path, *profile_path, *epsilon, *expected, out);
      };
    });
  }

  // bimatrix ------------------------------------------------------------
  {
    auto* bimatrix = app.add_subcommand("bimatrix", "bimatrix game solvers");
    bimatrix->require_subcommand(1);
    {
      auto* cmd = bimatrix->add_subcommand(
          "solve-sparse", "uniform pair with certified 2k/n regret bound");
      auto game_path = std::make_shared<std::string>();
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("--game", *game_path, "game JSON")->required();
      cmd->add_option("-o,--output", *out_path, "write result JSON here");
      cmd->callback([&action, game_path, out_path, &out]() {
        action = [=, &out]() {
          const BimatrixGame game =
              bimatrix_from_json(load_json_file(*game_path));
          const SparseSolution solution = solve_sparse(game);
          const RegretPair regret = bimatrix_regret(game, solution.pair);
          Json result{{"pair", to_json(solution.pair)},
                      {"regret_bound", solution.regret_bound},
                      {"row_regret", regret.row},
                      {"col_regret", regret.col},
                      {"sparsity", sparsity(game)}};
          emit(out, result);
          maybe_write(*out_path, result);
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = bimatrix->add_subcommand(
          "sample", "oblivious random-multiset equilibrium sampler");
      auto game_path = std::make_shared<std::string>();
      auto out_path = std::make_shared<std::string>();
      auto epsilon = std::make_shared<double>(0.5);
      auto max_trials = std::make_shared<long long>(1000);
      auto seed = std::make_shared<std::uint64_t>(0);
      auto expected = std::make_shared<bool>(false);
      auto all_trials = std::make_shared<bool>(false);
      cmd->add_option("--game", *game_path, "game JSON")->required();
      cmd->add_option("--epsilon", *epsilon, "target accuracy")->required();
      cmd->add_option("--max-trials", *max_trials, "trial budget");
      cmd->add_option("--seed", *seed, "RNG seed");
      cmd->add_flag("--expected-payoff", *expected,
                    "use expected-payoff regret");
      cmd->add_flag("--all-trials", *all_trials,
                    "do not stop at the first success (rate estimation)");
      cmd->add_option("-o,--output", *out_path, "write report JSON here");
      cmd->callback([&action, game_path, out_path, epsilon, max_trials, seed,
                     expected, all_trials, &out]() {
        action = [=, &out]() {
          const BimatrixGame game =
              bimatrix_from_json(load_json_file(*game_path));
          const RegretKind kind = *expected ? RegretKind::kExpectedPayoff
                                            : RegretKind::kWellSupported;
          const SamplerReport report = oblivious_sampler(
              game, *epsilon, *max_trials, *seed, kind, !*all_trials);
          out << "seed " << report.seed << "\n";
          const Json result = to_json(report);
          emit(out, result);
          maybe_write(*out_path, result);
          return report.successes > 0 ? kExitSuccess : kExitNotFound;
        };
      });
    }
  }

  // anon ----------------------------------------------------------------
  {
    auto* anon = app.add_subcommand("anon", "anonymous game solvers");
    anon->require_subcommand(1);
    {
      auto* cmd = anon->add_subcommand("solve", "moment search");
      auto game_path = std::make_shared<std::string>();
      auto out_path = std::make_shared<std::string>();
      auto epsilon = std::make_shared<double>(0.2);
      auto k = std::make_shared<int>(-1);
      auto d = std::make_shared<int>(-1);
      auto c = std::make_shared<double>(1.0);
      auto no_verify = std::make_shared<bool>(false);
      cmd->add_option("game", *game_path, "game JSON")->required();
      cmd->add_option("--epsilon", *epsilon, "target accuracy")->required();
      cmd->add_option("--k", *k, "grid parameter (default from epsilon)");
      cmd->add_option("--d", *d, "moment depth (default from epsilon)");
      cmd->add_option("--c", *c, "structural constant");
      cmd->add_flag("--no-verify", *no_verify,
                    "skip the exact re-check of candidate profiles");
      cmd->add_option("-o,--output", *out_path, "write result JSON here");
      cmd->callback([&action, game_path, out_path, epsilon, k, d, c, no_verify,
                     &out]() {
        action = [=, &out]() {
          const AnonymousGame game =
              anonymous_from_json(load_json_file(*game_path));
          SearchParams params = structural_params(
              *epsilon, *c,
              *k > 0 ? std::optional<int>(*k) : std::nullopt,
              *d > 0 ? std::optional<int>(*d) : std::nullopt);
          params.verify_output = !*no_verify;
          const auto started = std::chrono::steady_clock::now();
          const auto outcome = moment_search(game, params);
          const double wall_seconds =
              std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
          if (!outcome) {
            Json result{{"profile", nullptr},
                        {"max_regret", nullptr},
                        {"guess_used", nullptr},
                        {"wall_time", wall_seconds}};
            emit(out, result);
            maybe_write(*out_path, result);
            return kExitNotFound;
          }
          Json result{{"profile", to_json(outcome->profile)},
                      {"max_regret", outcome->max_regret},
                      {"guess_used", outcome->guess},
                      {"wall_time", wall_seconds}};
          emit(out, result);
          maybe_write(*out_path, result);
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = anon->add_subcommand(
          "oracle", "brute-force grid enumeration of equilibria");
      auto game_path = std::make_shared<std::string>();
      auto out_path = std::make_shared<std::string>();
      auto grid = std::make_shared<int>(2);
      auto epsilon = std::make_shared<double>(0.0);
      auto max_players = std::make_shared<int>(6);
      auto max_grid = std::make_shared<int>(16);
      auto limit = std::make_shared<long long>(-1);
      cmd->add_option("game", *game_path, "game JSON")->required();
      cmd->add_option("--grid", *grid, "grid denominator")->required();
      cmd->add_option("--epsilon", *epsilon, "tolerance")->required();
      cmd->add_option("--max-players", *max_players, "budget cap on n");
      cmd->add_option("--max-grid", *max_grid, "budget cap on the grid");
      cmd->add_option("--limit", *limit, "stop after this many profiles");
      cmd->callback([&action, game_path, out_path, grid, epsilon, max_players,
                     max_grid, limit, &out]() {
        action = [=, &out]() {
          const AnonymousGame game =
              anonymous_from_json(load_json_file(*game_path));
          BruteForceBudget budget;
          budget.max_players = *max_players;
          budget.max_grid = *max_grid;
          budget.max_results = *limit;
          const auto profiles =
              brute_force_grid_nash(game, *grid, *epsilon, budget);
          Json found = Json::array();
          for (const AnonymousProfile& p : profiles) found.push_back(to_json(p));
          Json result{{"count", profiles.size()}, {"profiles", std::move(found)}};
          emit(out, result);
          maybe_write(*out_path, result);
          return profiles.empty() ? kExitNotFound : kExitSuccess;
        };
      });
    }
  }

  // cover ---------------------------------------------------------------
  {
    auto* cover = app.add_subcommand("cover", "sparse epsilon-cover tools");
    cover->require_subcommand(1);
    {
      auto* cmd = cover->add_subcommand("build", "construct a cover");
      auto n = std::make_shared<int>(2);
      auto k = std::make_shared<int>(2);
      auto d = std::make_shared<int>(2);
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("--n", *n, "number of indicators")->required();
      cmd->add_option("--k", *k, "grid parameter")->required();
      cmd->add_option("--d", *d, "moment depth")->required();
      cmd->add_option("-o,--output", *out_path, "cover JSON path")->required();
      cmd->callback([&action, n, k, d, out_path, &out]() {
        action = [=, &out]() {
          const Cover cover_value = build_cover(*n, *k, *d);
          write_json_file(*out_path, to_json(cover_value));
          int sparse = 0;
          for (const CoverElement& e : cover_value.elements) {
            if (std::holds_alternative<SparseForm>(e.form)) ++sparse;
          }
          Json summary{{"elements", cover_value.elements.size()},
                       {"sparse", sparse},
                       {"binomial", cover_value.elements.size() - sparse}};
          emit(out, summary);
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = cover->add_subcommand(
          "check", "closest cover element to a collection");
      auto cover_path = std::make_shared<std::string>();
      auto probs = std::make_shared<std::vector<double>>();
      cmd->add_option("cover", *cover_path, "cover JSON")->required();
      cmd->add_option("--probs", *probs, "indicator expectations")
          ->required()
          ->expected(-1);
      cmd->callback([&action, cover_path, probs, &out]() {
        action = [=, &out]() {
          const Cover cover_value = cover_from_json(load_json_file(*cover_path));
          const auto [index, tv] =
              cover_check(cover_value, collection_from_doubles(*probs));
          Json result{{"element_index", index}, {"tv", tv}};
          emit(out, result);
          return kExitSuccess;
        };
      });
    }
  }

  // pbd -------------------------------------------------------------------
  {
    auto* pbd = app.add_subcommand("pbd", "Poisson binomial computations");
    pbd->require_subcommand(1);
    {
      auto* cmd = pbd->add_subcommand("pmf", "exact pmf of a sum of indicators");
      auto probs = std::make_shared<std::vector<double>>();
      cmd->add_option("--probs", *probs, "indicator expectations")
          ->required()
          ->expected(-1);
      cmd->callback([&action, probs, &out]() {
        action = [=, &out]() {
          const Json pmf = pmf_json(pbd_pmf(collection_from_doubles(*probs)));
          emit(out, Json{{"pmf", pmf}});
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = pbd->add_subcommand("tv", "total variation of two sums");
      auto a = std::make_shared<std::vector<double>>();
      auto b = std::make_shared<std::vector<double>>();
      cmd->add_option("--a", *a, "first collection")->required()->expected(-1);
      cmd->add_option("--b", *b, "second collection")->required()->expected(-1);
      cmd->callback([&action, a, b, &out]() {
        action = [=, &out]() {
          const double tv = tv_distance(pbd_pmf(collection_from_doubles(*a)),
                                        pbd_pmf(collection_from_doubles(*b)));
          emit(out, Json{{"tv", tv}});
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = pbd->add_subcommand("moments", "power sums and raw moments");
      auto probs = std::make_shared<std::vector<double>>();
      auto depth = std::make_shared<int>(2);
      cmd->add_option("--probs", *probs, "indicator expectations")
          ->required()
          ->expected(-1);
      cmd->add_option("--d", *depth, "depth")->required();
      cmd->callback([&action, probs, depth, &out]() {
        action = [=, &out]() {
          const IndicatorCollection c = collection_from_doubles(*probs);
          const Eigen::VectorXd sums = power_sums(c, *depth);
          const Eigen::VectorXd raw = raw_moments(pbd_pmf(c), *depth);
          Json js = Json::array(), jr = Json::array();
          for (int l = 0; l < sums.size(); ++l) js.push_back(sums[l]);
          for (int l = 0; l < raw.size(); ++l) jr.push_back(raw[l]);
          emit(out, Json{{"power_sums", std::move(js)},
                         {"raw_moments", std::move(jr)},
                         {"bound", roos_bound(*depth)}});
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = pbd->add_subcommand(
          "roos", "binomial-derivative expansion of the pmf");
      auto probs = std::make_shared<std::vector<double>>();
      auto base_p = std::make_shared<double>(-1.0);
      auto order = std::make_shared<int>(-1);
      cmd->add_option("--probs", *probs, "indicator expectations")
          ->required()
          ->expected(-1);
      cmd->add_option("--p", *base_p, "base point (default: mean)");
      cmd->add_option("--order", *order, "truncation order (default: n)");
      cmd->callback([&action, probs, base_p, order, &out]() {
        action = [=, &out]() {
          const IndicatorCollection c = collection_from_doubles(*probs);
          const double p = *base_p >= 0.0 ? *base_p : c.mean_prob();
          const int L = *order >= 0 ? *order : c.size();
          const SignedMeasure measure = roos_expansion(c, p, L);
          Json values = Json::array();
          for (int m = 0; m < measure.values.size(); ++m) {
            values.push_back(measure.values[m]);
          }
          emit(out, Json{{"values", std::move(values)},
                         {"base_p", p},
                         {"order", L}});
          return kExitSuccess;
        };
      });
    }
  }

  // gen ---------------------------------------------------------------------
  {
    auto* gen = app.add_subcommand("gen", "game generators");
    gen->require_subcommand(1);
    {
      auto* cmd = gen->add_subcommand("gs", "subset-family bimatrix game");
      auto ell = std::make_shared<int>(4);
      auto subset = std::make_shared<std::vector<int>>();
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("--ell", *ell, "even subset size")->required();
      cmd->add_option("--s", *subset, "subset (default 0..ell-1)")->expected(-1);
      cmd->add_option("-o,--output", *out_path, "game JSON path");
      cmd->callback([&action, ell, subset, out_path, &out]() {
        action = [=, &out]() {
          GsSpec spec = subset->empty() ? GsSpec::canonical(*ell)
                                        : GsSpec{*ell, *subset};
          const Json game = to_json(gen_gs_game(spec));
          emit(out, game);
          maybe_write(*out_path, game);
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = gen->add_subcommand("gp", "prescribed-equilibrium anonymous game");
      auto k = std::make_shared<int>(2);
      auto delta = std::make_shared<double>(0.05);
      auto p = std::make_shared<std::vector<double>>();
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("--k", *k, "type-A player count")->required();
      cmd->add_option("--delta", *delta, "slack parameter")->required();
      cmd->add_option("--p", *p, "target probabilities")->required()->expected(-1);
      cmd->add_option("-o,--output", *out_path, "game JSON path");
      cmd->callback([&action, k, delta, p, out_path, &out]() {
        action = [=, &out]() {
          GpSpec spec;
          spec.k = *k;
          spec.delta = *delta;
          spec.p.resize(p->size());
          for (size_t i = 0; i < p->size(); ++i) spec.p[i] = (*p)[i];
          const Json game = to_json(gen_gp_game(spec));
          emit(out, game);
          maybe_write(*out_path, game);
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = gen->add_subcommand("random", "seeded random game");
      auto kind = std::make_shared<std::string>("sparse");
      auto n = std::make_shared<int>(8);
      auto k = std::make_shared<int>(2);
      auto seed = std::make_shared<std::uint64_t>(0);
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("--kind", *kind, "sparse | anonymous")
          ->check(CLI::IsMember({"sparse", "anonymous"}));
      cmd->add_option("--n", *n, "size")->required();
      cmd->add_option("--k", *k, "sparsity (sparse kind only)");
      cmd->add_option("--seed", *seed, "RNG seed");
      cmd->add_option("-o,--output", *out_path, "game JSON path");
      cmd->callback([&action, kind, n, k, seed, out_path, &out]() {
        action = [=, &out]() {
          out << "seed " << *seed << "\n";
          const Json game = *kind == "sparse"
                                ? to_json(gen_random_sparse(*n, *k, *seed))
                                : to_json(gen_random_anonymous(*n, *seed));
          emit(out, game);
          maybe_write(*out_path, game);
          return kExitSuccess;
        };
      });
    }
  }

  // sweep ---------------------------------------------------------------
  {
    auto* sweep = app.add_subcommand("sweep", "parameter sweeps to CSV");
    sweep->require_subcommand(1);
    {
      auto* cmd = sweep->add_subcommand(
          "tv-vs-d",
          "max TV among power-sum-matched grid collections, per depth");
      auto max_n = std::make_shared<int>(4);
      auto grid = std::make_shared<int>(8);
      auto depths = std::make_shared<std::vector<int>>();
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("--max-n", *max_n, "largest collection size");
      cmd->add_option("--grid", *grid, "grid denominator");
      cmd->add_option("--d", *depths, "depths to evaluate")->expected(-1);
      cmd->add_option("-o,--output", *out_path, "CSV path");
      cmd->callback([&action, max_n, grid, depths, out_path, &out, &err]() {
        action = [=, &out]() {
          std::vector<std::string> rows(depths->size());
          for_each_cell(static_cast<int>(depths->size()), [&](int cell) {
            const int d = (*depths)[cell];
            // Enumerate all multisets of sizes 1..max_n over the half-open
            // low grid, group them by their exact first-d power sums, and
            // record the largest within-group distance.
            std::map<std::vector<long long>, std::vector<Eigen::VectorXd>>
                groups;
            std::vector<int> current;
            const int vmax = *grid / 2;
            const std::function<void(int, int)> rec = [&](int start, int left) {
              if (!current.empty()) {
                std::vector<long long> key(d, 0);
                for (int v : current) {
                  long long power = 1;
                  for (int l = 0; l < d; ++l) {
                    power *= v;
                    key[l] += power;
                  }
                }
                // the key carries the collection size so only equal-length
                // collections are compared
                key.push_back(static_cast<long long>(current.size()));
                Eigen::VectorXd probs(current.size());
                for (size_t i = 0; i < current.size(); ++i) {
                  probs[i] = static_cast<double>(current[i]) / *grid;
                }
                groups[key].push_back(pbd_pmf(IndicatorCollection(probs)).pmf());
              }
              if (left == 0) return;
              for (int v = start; v <= vmax; ++v) {
                current.push_back(v);
                rec(v, left - 1);
                current.pop_back();
              }
            };
            rec(1, *max_n);
            double max_tv = 0.0;
            long long pairs = 0;
            for (const auto& [key, members] : groups) {
              for (size_t a = 0; a + 1 < members.size(); ++a) {
                for (size_t b = a + 1; b < members.size(); ++b) {
                  ++pairs;
                  const double tv =
                      0.5 * (members[a] - members[b]).cwiseAbs().sum();
                  max_tv = std::max(max_tv, tv);
                }
              }
            }
            std::ostringstream row;
            row << d << "," << pairs << "," << format_double(max_tv) << ","
                << format_double(roos_bound(d));
            rows[cell] = row.str();
          });
          std::ostringstream csv;
          csv << "d,pairs,max_tv,roos_bound\n";
          for (const std::string& row : rows) csv << row << "\n";
          out << csv.str();
          if (!out_path->empty()) {
            std::ofstream file(*out_path);
            if (!file) throw InputError("cannot write file: " + *out_path);
            file << csv.str();
          }
          return kExitSuccess;
        };
      });
    }
    {
      auto* cmd = sweep->add_subcommand(
          "sampler", "oblivious sampler success rates over epsilon x seeds");
      auto game_path = std::make_shared<std::string>();
      auto epsilons = std::make_shared<std::vector<double>>();
      auto trials = std::make_shared<long long>(200);
      auto seeds = std::make_shared<int>(1);
      auto seed0 = std::make_shared<std::uint64_t>(0);
      auto out_path = std::make_shared<std::string>();
      cmd->add_option("--game", *game_path, "game JSON")->required();
      cmd->add_option("--epsilon", *epsilons, "epsilon grid")->expected(-1);
      cmd->add_option("--trials", *trials, "trials per cell");
      cmd->add_option("--seeds", *seeds, "number of seeds per epsilon");
      cmd->add_option("--seed0", *seed0, "first seed");
      cmd->add_option("-o,--output", *out_path, "CSV path");
      cmd->callback([&action, game_path, epsilons, trials, seeds, seed0,
                     out_path, &out]() {
        action = [=, &out]() {
          const BimatrixGame game =
              bimatrix_from_json(load_json_file(*game_path));
          const int cells = static_cast<int>(epsilons->size()) * *seeds;
          std::vector<std::string> rows(cells);
          for_each_cell(cells, [&](int cell) {
            const double epsilon = (*epsilons)[cell / *seeds];
            const std::uint64_t seed = *seed0 + (cell % *seeds);
            const SamplerReport report = oblivious_sampler(
                game, epsilon, *trials, seed, RegretKind::kWellSupported,
                /*stop_at_first=*/false);
            std::ostringstream row;
            row << format_double(epsilon) << "," << seed << ","
                << report.sample_size << "," << report.trials << ","
                << report.successes << ","
                << format_double(static_cast<double>(report.successes) /
                                 static_cast<double>(report.trials));
            rows[cell] = row.str();
          });
          std::ostringstream csv;
          csv << "epsilon,seed,t,trials,successes,success_rate\n";
          for (const std::string& row : rows) csv << row << "\n";
          out << csv.str();
          if (!out_path->empty()) {
            std::ofstream file(*out_path);
            if (!file) throw InputError("cannot write file: " + *out_path);
            file << csv.str();
          }
          return kExitSuccess;
        };
      });
    }
  }

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("momentnash");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    return action ? action() : kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace momentnash
