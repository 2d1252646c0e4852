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
// A sparse cover, under total variation distance, of the distributions of
// sums of n independent indicators: heavy-binomial forms enumerated
// directly, plus sparse forms deduplicated by exact moment profile.

#ifndef MOMENTNASH_SPARSE_COVER_HPP_
#define MOMENTNASH_SPARSE_COVER_HPP_

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "momentnash/indicator_sums.hpp"

namespace momentnash {

// At most k^3 mixing indicators with expectations on the grid
// {1/k^2 .. (k^2-1)/k^2} (none 0 or 1), plus `ones` deterministic indicators;
// the rest are 0. Expectations stored as ascending numerators over k2.
struct SparseForm {
  int k2 = 0;
  std::vector<int> expectation_nums;
  int ones = 0;
};

// ell indicators sharing expectation q = q_num/(kn), plus `ones`
// deterministic ones, the rest 0. Valid only when ell*q >= k^2 - 1/k and
// ell*q*(1-q) >= k^2 - k - 1 - 3/k.
struct BinomialForm {
  int ell = 0;
  long long q_num = 0;
  long long kn = 0;
  int ones = 0;
};

struct CoverElement {
  std::variant<SparseForm, BinomialForm> form;
};

// Exact integer moment profile: low[l] and high[l] are the (l+1)-power sums
// over the low and high mixing indicators, as numerators over (k^2)^(l+1);
// `ones` counts the deterministic-1 indicators. Ordered so it can key a map.
struct ExactMomentProfile {
  std::vector<long long> low;
  std::vector<long long> high;
  int ones = 0;

  friend auto operator<=>(const ExactMomentProfile&,
                          const ExactMomentProfile&) = default;
};

struct Cover {
  int n = 0, k = 0, d = 0;
  std::vector<CoverElement> elements;
  // Index of the unique sparse element carrying each realizable profile.
  std::map<ExactMomentProfile, int> profile_index;
};

// All (ell, q, ones) triples passing the two heavy-binomial bounds, checked
// in exact integer arithmetic; at most (n+1)^2 * n * k of them.
std::vector<CoverElement> enumerate_binomial_forms(int n, int k);

// All realizable exact moment profiles with at most k^3 low and k^3 high
// mixing indicators, paired with the lexicographically-first sparse witness;
// no profile appears twice. Deterministic order.
std::vector<std::pair<ExactMomentProfile, CoverElement>>
enumerate_sparse_profiles(int n, int k, int d);

// Sparse forms (deduplicated by profile) followed by binomial forms.
Cover build_cover(int n, int k, int d);

// Distribution over {0..n} induced by an element (unused indicators are 0).
CountDistribution element_distribution(const CoverElement& element, int n);

// The element whose induced distribution is closest to that of `c` in total
// variation, with the achieved distance; first index wins ties.
std::pair<int, double> cover_check(const Cover& cover,
                                   const IndicatorCollection& c);

}  // namespace momentnash

#endif  // MOMENTNASH_SPARSE_COVER_HPP_
