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

#include "momentnash/hard_instances.hpp"

#include <algorithm>
#include <set>

namespace momentnash {

long long binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (value > (static_cast<unsigned __int128>(1) << 62)) {
      throw ResourceError("binomial coefficient overflows");
    }
  }
  return static_cast<long long>(value);
}

GsSpec GsSpec::canonical(int ell) {
  GsSpec spec;
  spec.ell = ell;
  spec.s.resize(ell);
  for (int i = 0; i < ell; ++i) spec.s[i] = i;
  return spec;
}

namespace {

// Size-r subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> lexicographic_subsets(int m, int r) {
  std::vector<std::vector<int>> subsets;
  std::vector<int> current(r);
  for (int i = 0; i < r; ++i) current[i] = i;
  while (true) {
    subsets.push_back(current);
    int pos = r - 1;
    while (pos >= 0 && current[pos] == m - r + pos) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (int j = pos + 1; j < r; ++j) current[j] = current[j - 1] + 1;
  }
  return subsets;
}

}  // namespace

BimatrixGame gen_gs_game(const GsSpec& spec) {
  if (spec.ell < 2 || spec.ell % 2 != 0) {
    throw InputError("ell must be an even integer >= 2");
  }
  const long long n_ll = binomial_coefficient(spec.ell, spec.ell / 2);
  if (n_ll > 4096) throw ResourceError("game size exceeds budget");
  const int n = static_cast<int>(n_ll);
  if (static_cast<int>(spec.s.size()) != spec.ell) {
    throw InputError("S must have exactly ell elements");
  }
  std::set<int> s_set(spec.s.begin(), spec.s.end());
  if (static_cast<int>(s_set.size()) != spec.ell || *s_set.begin() < 0 ||
      *s_set.rbegin() >= n) {
    throw InputError("S must be a set of distinct indices in [0, n)");
  }
  std::vector<int> s_sorted(s_set.begin(), s_set.end());

  // Column j corresponds to the j-th size-(ell/2) subset of S in
  // lexicographic order over the sorted S.
  const auto subsets = lexicographic_subsets(spec.ell, spec.ell / 2);

  Eigen::MatrixXd row = Eigen::MatrixXd::Constant(n, n, -1.0);
  Eigen::MatrixXd col = Eigen::MatrixXd::Constant(n, n, 1.0);
  for (int j = 0; j < n; ++j) {
    std::set<int> in_subset;
    for (int pos : subsets[j]) in_subset.insert(s_sorted[pos]);
    for (int i : s_sorted) {
      if (in_subset.count(i)) {
        row(i, j) = 1.0;
        col(i, j) = 0.0;
      } else {
        row(i, j) = 0.0;
        col(i, j) = 1.0;
      }
    }
  }
  return BimatrixGame(std::move(row), std::move(col));
}

AnonymousGame gen_gp_game(const GpSpec& spec) {
  GpPayoffs payoffs;
  payoffs.k = spec.k;
  payoffs.delta = spec.delta;
  payoffs.p = spec.p;
  return AnonymousGame::from_gp(std::move(payoffs));
}

BimatrixGame gen_random_sparse(int n, int k, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be >= 1");
  if (k < 0 || k > n) throw InputError("k must lie in [0, n]");
  Rng rng(seed);

  // k random permutations place at most k nonzeros per row and per column;
  // collisions leave a position untouched, so counts only go down.
  const auto fill = [&](Eigen::MatrixXd& m) {
    for (int round = 0; round < k; ++round) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      for (int i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
      }
      for (int i = 0; i < n; ++i) {
        m(i, perm[i]) = rng.uniform_real(-1.0, 1.0);
      }
    }
  };
  Eigen::MatrixXd row = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd col = Eigen::MatrixXd::Zero(n, n);
  fill(row);
  fill(col);
  return BimatrixGame(std::move(row), std::move(col));
}

AnonymousGame gen_random_anonymous(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be >= 1");
  Rng rng(seed);
  std::vector<PlayerUtility> utilities(n);
  for (int i = 0; i < n; ++i) {
    utilities[i].u0.resize(n);
    utilities[i].u1.resize(n);
    for (int c = 0; c < n; ++c) {
      utilities[i].u0[c] = rng.uniform_real(-1.0, 1.0);
      utilities[i].u1[c] = rng.uniform_real(-1.0, 1.0);
    }
  }
  return AnonymousGame::from_tables(std::move(utilities));
}

}  // namespace momentnash
