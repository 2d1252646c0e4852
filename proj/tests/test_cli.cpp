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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "momentnash/cli.hpp"
#include "momentnash/hard_instances.hpp"
#include "momentnash/io.hpp"
#include "test_util.hpp"

using namespace momentnash;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "momentnash_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_game(const std::string& name, const Json& value) {
  const fs::path path = scratch_dir() / name;
  write_json_file(path.string(), value);
  return path;
}

Json last_json(const std::string& text) {
  // Output may carry a leading "seed N" line; JSON starts at the first '{'.
  const size_t start = text.find('{');
  REQUIRE(start != std::string::npos);
  return Json::parse(text.substr(start));
}

}  // namespace

TEST_CASE("verify accepts the dominant-strategy equilibrium") {
  const fs::path game =
      write_game("dominant.json", to_json(testutil::dominant_one(3)));
  const fs::path profile = write_game(
      "ones.json", to_json(make_anonymous_profile(Eigen::VectorXd::Ones(3))));
  const CliResult r = run({"verify", "--game", game.string(), "--profile",
                           profile.string(), "--epsilon", "0.1"});
  CHECK(r.code == 0);
  const Json result = last_json(r.out);
  CHECK(result.at("max_regret").get<double>() == 0.0);
  CHECK(result.at("is_equilibrium").get<bool>());
}

TEST_CASE("verify rejects a far-from-equilibrium profile with exit 1") {
  const fs::path game =
      write_game("dominant2.json", to_json(testutil::dominant_one(3)));
  const fs::path profile = write_game(
      "zeros.json", to_json(make_anonymous_profile(Eigen::VectorXd::Zero(3))));
  const CliResult r = run({"verify", "--game", game.string(), "--profile",
                           profile.string(), "--epsilon", "0.1"});
  CHECK(r.code == 1);
}

TEST_CASE("generated subset game verifies at zero regret") {
  const fs::path game_path = scratch_dir() / "gs.json";
  const CliResult gen_result =
      run({"gen", "gs", "--ell", "4", "-o", game_path.string()});
  REQUIRE(gen_result.code == 0);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(6);
  for (int i = 0; i < 4; ++i) x[i] = 0.25;
  const fs::path profile = write_game(
      "gs_profile.json",
      to_json(MixedPair{x, Eigen::VectorXd::Constant(6, 1.0 / 6)}));
  const CliResult r = run({"verify", "--game", game_path.string(), "--profile",
                           profile.string(), "--epsilon", "0.000001"});
  CHECK(r.code == 0);
}

TEST_CASE("anon solve emits a profile that re-verifies at its regret") {
  const fs::path game =
      write_game("anti.json", to_json(testutil::anti_coordination(3)));
  const fs::path result_path = scratch_dir() / "solve.json";
  const CliResult r =
      run({"anon", "solve", game.string(), "--epsilon", "0.2", "--k", "2",
           "--d", "2", "-o", result_path.string()});
  REQUIRE(r.code == 0);
  const Json result = load_json_file(result_path.string());
  REQUIRE(!result.at("profile").is_null());
  const double reported = result.at("max_regret").get<double>();
  CHECK(reported <= 0.2 + 1e-9);

  const fs::path profile = write_game("solved_profile.json",
                                      result.at("profile"));
  std::ostringstream eps;
  eps.precision(17);
  eps << reported + 1e-9;
  const CliResult check = run({"verify", "--game", game.string(), "--profile",
                               profile.string(), "--epsilon", eps.str()});
  CHECK(check.code == 0);
}

TEST_CASE("anon solve reports absence with exit 1") {
  // Two players whose unique mixed equilibrium is off the quarter grid.
  std::vector<PlayerUtility> utilities(2);
  utilities[0].u0 = Eigen::VectorXd::Constant(2, 1.0 / 3);
  utilities[0].u1.resize(2);
  utilities[0].u1 << 0.0, 1.0;
  utilities[1].u0 = Eigen::VectorXd::Constant(2, 1.0 / 3);
  utilities[1].u1.resize(2);
  utilities[1].u1 << 1.0, 0.0;
  const fs::path game = write_game(
      "offgrid.json", to_json(AnonymousGame::from_tables(utilities)));
  const CliResult r = run({"anon", "solve", game.string(), "--epsilon", "0.05",
                           "--k", "2", "--d", "2"});
  CHECK(r.code == 1);
}

TEST_CASE("anon solve results are reproducible modulo wall time") {
  const fs::path game =
      write_game("anti_repro.json", to_json(testutil::anti_coordination(3)));
  const CliResult a = run({"anon", "solve", game.string(), "--epsilon", "0.2",
                           "--k", "2", "--d", "2"});
  const CliResult b = run({"anon", "solve", game.string(), "--epsilon", "0.2",
                           "--k", "2", "--d", "2"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  Json ja = last_json(a.out);
  Json jb = last_json(b.out);
  ja.erase("wall_time");
  jb.erase("wall_time");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("anon oracle lists grid equilibria and honors budgets") {
  const fs::path game =
      write_game("anti_oracle.json", to_json(testutil::anti_coordination(3)));
  const CliResult r = run({"anon", "oracle", game.string(), "--grid", "2",
                           "--epsilon", "0"});
  CHECK(r.code == 0);
  const Json result = last_json(r.out);
  CHECK(result.at("count").get<int>() >= 1);

  const CliResult too_big = run({"anon", "oracle", game.string(), "--grid",
                                 "64", "--epsilon", "0"});
  CHECK(too_big.code == 3);
}

TEST_CASE("cover build and check round trip through files") {
  const fs::path cover_path = scratch_dir() / "cover.json";
  const CliResult build = run({"cover", "build", "--n", "2", "--k", "2", "--d",
                               "2", "-o", cover_path.string()});
  REQUIRE(build.code == 0);
  const CliResult check = run(
      {"cover", "check", cover_path.string(), "--probs", "0.5", "0.5"});
  REQUIRE(check.code == 0);
  const Json result = last_json(check.out);
  CHECK(result.at("tv").get<double>() <= 1e-15);
}

TEST_CASE("pbd subcommands expose the probability toolkit") {
  const CliResult tv =
      run({"pbd", "tv", "--a", "0.1", "0.4", "--b", "0.25", "0.25"});
  REQUIRE(tv.code == 0);
  CHECK(last_json(tv.out).at("tv").get<double>() ==
        doctest::Approx(0.045).epsilon(1e-12));

  const CliResult pmf = run({"pbd", "pmf", "--probs", "0.5", "0.5", "0.5"});
  REQUIRE(pmf.code == 0);
  CHECK(last_json(pmf.out).at("pmf")[1].get<double>() ==
        doctest::Approx(0.375).epsilon(1e-12));

  const CliResult roos =
      run({"pbd", "roos", "--probs", "0.2", "0.3", "--p", "0.25"});
  REQUIRE(roos.code == 0);
  CHECK(last_json(roos.out).at("values")[0].get<double>() ==
        doctest::Approx(0.56).epsilon(1e-9));
}

TEST_CASE("bimatrix solve-sparse and sample work end to end") {
  Eigen::MatrixXd r(2, 2);
  r << 1, -1, -1, 1;
  const fs::path game =
      write_game("pennies.json", to_json(BimatrixGame(r, -r)));

  const CliResult solve =
      run({"bimatrix", "solve-sparse", "--game", game.string()});
  REQUIRE(solve.code == 0);
  const Json solved = last_json(solve.out);
  CHECK(solved.at("row_regret").get<double>() <=
        solved.at("regret_bound").get<double>() + 1e-12);

  const CliResult sample =
      run({"bimatrix", "sample", "--game", game.string(), "--epsilon", "0.6",
           "--max-trials", "500", "--seed", "11"});
  CHECK(sample.code == 0);
  CHECK(sample.out.find("seed 11") != std::string::npos);
}

TEST_CASE("a fruitless sampler run exits with code 1") {
  // Only strategy 0 is tolerable for either player, so random multisets of
  // this size essentially never form an equilibrium.
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(4, 4);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(4, 4);
  for (int j = 0; j < 4; ++j) r(0, j) = 1.0;
  for (int i = 0; i < 4; ++i) c(i, 0) = 1.0;
  const fs::path game = write_game("needle.json", to_json(BimatrixGame(r, c)));
  const CliResult sample =
      run({"bimatrix", "sample", "--game", game.string(), "--epsilon", "0.3",
           "--max-trials", "3", "--seed", "5"});
  CHECK(sample.code == 1);
}

TEST_CASE("identical seeds give byte-identical command output") {
  const std::vector<std::string> args = {"gen",  "random", "--kind",
                                         "sparse", "--n",  "6",
                                         "--k",  "2",      "--seed", "123"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("games and profiles survive JSON round trips unchanged") {
  Rng rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + rng.uniform_int(5);
    const BimatrixGame game = gen_random_sparse(n, 2, rng.next_u64());
    const BimatrixGame back = bimatrix_from_json(to_json(game));
    CHECK(back.row_payoffs() == game.row_payoffs());
    CHECK(back.col_payoffs() == game.col_payoffs());

    const AnonymousGame anon = gen_random_anonymous(n, rng.next_u64());
    const AnonymousGame anon_back = anonymous_from_json(to_json(anon));
    for (int i = 0; i < n; ++i) {
      CHECK(anon_back.tables()[i].u0 == anon.tables()[i].u0);
      CHECK(anon_back.tables()[i].u1 == anon.tables()[i].u1);
    }

    Eigen::VectorXd q(n);
    for (int i = 0; i < n; ++i) q[i] = rng.uniform01();
    const AnonymousProfile profile_back =
        anonymous_profile_from_json(to_json(AnonymousProfile{q}));
    CHECK(profile_back.q == q);
  }

  GpPayoffs gp;
  gp.k = 2;
  gp.delta = 0.05;
  gp.p.resize(2);
  gp.p << 0.4, 0.6;
  const AnonymousGame typed = AnonymousGame::from_gp(gp);
  const AnonymousGame typed_back = anonymous_from_json(to_json(typed));
  REQUIRE(typed_back.gp() != nullptr);
  CHECK(typed_back.gp()->p == gp.p);
  CHECK(typed_back.gp()->delta == gp.delta);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"verify", "--game", "/nonexistent.json", "--profile",
             "/nonexistent.json", "--epsilon", "0.1"})
            .code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"pbd", "pmf", "--probs", "1.5"}).code == 2);

  const fs::path broken = scratch_dir() / "broken.json";
  std::ofstream(broken) << "{ not json";
  CHECK(run({"verify", "--game", broken.string(), "--profile", broken.string(),
             "--epsilon", "0.1"})
            .code == 2);
}

TEST_CASE("anon solve rejects structurally typed games") {
  Json gp_game{
      {"n", 4},
      {"gp", Json{{"k", 2}, {"delta", 0.05}, {"p", Json::array({0.4, 0.6})}}}};
  const fs::path game = write_game("gp_solve.json", gp_game);
  const CliResult r = run({"anon", "solve", game.string(), "--epsilon", "0.2",
                           "--k", "2", "--d", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("count-indexed") != std::string::npos);
}

TEST_CASE("thread count only changes scheduling, never output") {
  const std::vector<std::string> args = {"sweep",   "tv-vs-d", "--max-n", "3",
                                         "--grid",  "8",       "--d",     "1",
                                         "2",       "3"};
  const CliResult serial = run(args);
  ::setenv("MOMENTNASH_THREADS", "4", 1);
  const CliResult parallel = run(args);
  ::unsetenv("MOMENTNASH_THREADS");
  REQUIRE(serial.code == 0);
  REQUIRE(parallel.code == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("tv-vs-d sweep keeps max TV below the bound") {
  const CliResult r = run({"sweep", "tv-vs-d", "--max-n", "3", "--grid", "8",
                           "--d", "1", "2", "3"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "d,pairs,max_tv,roos_bound");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream cells(line);
    std::string d, pairs, max_tv, bound;
    std::getline(cells, d, ',');
    std::getline(cells, pairs, ',');
    std::getline(cells, max_tv, ',');
    std::getline(cells, bound, ',');
    CHECK(std::stod(max_tv) <= std::stod(bound));
  }
  CHECK(rows == 3);
}

TEST_CASE("an empty sweep grid produces a header-only CSV") {
  const CliResult r = run({"sweep", "tv-vs-d", "--max-n", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "d,pairs,max_tv,roos_bound\n");
}

TEST_CASE("sampler sweep rates stay within [0,1]") {
  Eigen::MatrixXd m(2, 2);
  m << 1, -1, -1, 1;
  const fs::path game =
      write_game("pennies_sweep.json", to_json(BimatrixGame(m, -m)));
  const CliResult r =
      run({"sweep", "sampler", "--game", game.string(), "--epsilon", "0.4",
           "0.6", "--trials", "50", "--seeds", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "epsilon,seed,t,trials,successes,success_rate");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    const size_t last_comma = line.rfind(',');
    const double rate = std::stod(line.substr(last_comma + 1));
    CHECK(rate >= 0.0);
    CHECK(rate <= 1.0);
  }
  CHECK(rows == 4);
}
