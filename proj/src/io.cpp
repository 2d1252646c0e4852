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

#include "momentnash/io.hpp"

#include <fstream>

namespace momentnash {

namespace {

Eigen::VectorXd vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a JSON array of numbers");
  Eigen::VectorXd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InputError("expected a number");
    v[i] = j[i].get<double>();
  }
  return v;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json j = Json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

Eigen::MatrixXd matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw InputError("matrix row count mismatch");
  }
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      throw InputError("matrix column count mismatch");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json j = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
  return j;
}

Json rational(long long num, long long den) {
  return Json{{"num", num}, {"den", den}};
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << value.dump(2) << "\n";
}

Json to_json(const BimatrixGame& game) {
  return Json{{"n", game.size()},
              {"R", matrix_to_json(game.row_payoffs())},
              {"C", matrix_to_json(game.col_payoffs())}};
}

BimatrixGame bimatrix_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("R") || !j.contains("C")) {
    throw InputError("bimatrix game needs fields n, R, C");
  }
  const int n = j.at("n").get<int>();
  if (n < 1) throw InputError("n must be >= 1");
  return BimatrixGame(matrix_from_json(j.at("R"), n, n),
                      matrix_from_json(j.at("C"), n, n));
}

Json to_json(const AnonymousGame& game) {
  Json j;
  j["n"] = game.players();
  if (const GpPayoffs* gp = game.gp()) {
    j["gp"] = Json{{"k", gp->k},
                   {"delta", gp->delta},
                   {"p", vector_to_json(gp->p)}};
    return j;
  }
  Json players = Json::array();
  for (const PlayerUtility& u : game.tables()) {
    players.push_back(
        Json{{"u0", vector_to_json(u.u0)}, {"u1", vector_to_json(u.u1)}});
  }
  j["u"] = std::move(players);
  return j;
}

AnonymousGame anonymous_from_json(const Json& j) {
  if (!j.contains("n")) throw InputError("anonymous game needs field n");
  const int n = j.at("n").get<int>();
  if (j.contains("gp")) {
    const Json& gp = j.at("gp");
    GpPayoffs payoffs;
    payoffs.k = gp.at("k").get<int>();
    payoffs.delta = gp.at("delta").get<double>();
    payoffs.p = vector_from_json(gp.at("p"));
    if (payoffs.k + 2 != n) throw InputError("gp game must have n = k + 2");
    return AnonymousGame::from_gp(std::move(payoffs));
  }
  if (!j.contains("u")) throw InputError("anonymous game needs field u or gp");
  const Json& players = j.at("u");
  if (!players.is_array() || static_cast<int>(players.size()) != n) {
    throw InputError("u must be an array of n per-player tables");
  }
  std::vector<PlayerUtility> utilities;
  utilities.reserve(n);
  for (const Json& entry : players) {
    PlayerUtility u;
    u.u0 = vector_from_json(entry.at("u0"));
    u.u1 = vector_from_json(entry.at("u1"));
    utilities.push_back(std::move(u));
  }
  return AnonymousGame::from_tables(std::move(utilities));
}

bool looks_like_bimatrix(const Json& game_json) {
  return game_json.contains("R") && game_json.contains("C");
}

Json to_json(const MixedPair& pair) {
  return Json{{"x", vector_to_json(pair.x)}, {"y", vector_to_json(pair.y)}};
}

MixedPair mixed_pair_from_json(const Json& j) {
  if (!j.contains("x") || !j.contains("y")) {
    throw InputError("profile needs fields x and y");
  }
  return make_mixed_pair(vector_from_json(j.at("x")),
                         vector_from_json(j.at("y")));
}

Json to_json(const AnonymousProfile& profile) {
  return Json{{"q", vector_to_json(profile.q)}};
}

AnonymousProfile anonymous_profile_from_json(const Json& j) {
  if (!j.contains("q")) throw InputError("profile needs field q");
  return make_anonymous_profile(vector_from_json(j.at("q")));
}

Json to_json(const SamplerReport& report) {
  Json j{{"trials", report.trials},
         {"successes", report.successes},
         {"first_success_trial", report.first_success_trial},
         {"seed", report.seed},
         {"rng", report.rng_algorithm},
         {"t", report.sample_size},
         {"epsilon", report.epsilon}};
  j["first_success"] =
      report.first_success ? to_json(*report.first_success) : Json(nullptr);
  return j;
}

Json to_json(const Cover& cover) {
  Json elements = Json::array();
  for (const CoverElement& element : cover.elements) {
    if (const auto* sparse = std::get_if<SparseForm>(&element.form)) {
      Json expectations = Json::array();
      for (int num : sparse->expectation_nums) {
        expectations.push_back(rational(num, sparse->k2));
      }
      elements.push_back(Json{{"type", "sparse"},
                              {"expectations", std::move(expectations)},
                              {"ones", sparse->ones}});
    } else {
      const auto& binom = std::get<BinomialForm>(element.form);
      elements.push_back(Json{{"type", "binomial"},
                              {"ell", binom.ell},
                              {"q", rational(binom.q_num, binom.kn)},
                              {"ones", binom.ones}});
    }
  }
  return Json{{"n", cover.n},
              {"k", cover.k},
              {"d", cover.d},
              {"elements", std::move(elements)}};
}

Cover cover_from_json(const Json& j) {
  Cover cover;
  cover.n = j.at("n").get<int>();
  cover.k = j.at("k").get<int>();
  cover.d = j.at("d").get<int>();
  const int k2 = cover.k * cover.k;
  for (const Json& entry : j.at("elements")) {
    const std::string type = entry.at("type").get<std::string>();
    if (type == "sparse") {
      SparseForm form;
      form.k2 = k2;
      form.ones = entry.at("ones").get<int>();
      for (const Json& e : entry.at("expectations")) {
        if (e.at("den").get<long long>() != k2) {
          throw InputError("sparse expectation denominator must be k^2");
        }
        form.expectation_nums.push_back(e.at("num").get<int>());
      }
      cover.elements.push_back(CoverElement{std::move(form)});
    } else if (type == "binomial") {
      BinomialForm form;
      form.ell = entry.at("ell").get<int>();
      form.q_num = entry.at("q").at("num").get<long long>();
      form.kn = entry.at("q").at("den").get<long long>();
      form.ones = entry.at("ones").get<int>();
      cover.elements.push_back(CoverElement{form});
    } else {
      throw InputError("unknown cover element type: " + type);
    }
  }
  return cover;
}

}  // namespace momentnash
