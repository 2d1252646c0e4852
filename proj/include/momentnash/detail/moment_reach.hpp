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
// Internal exact-integer machinery shared by the moment search and the
// sparse cover: mixed-radix packing of moment digit vectors and layered
// reachability over multisets of grid values.

#ifndef MOMENTNASH_DETAIL_MOMENT_REACH_HPP_
#define MOMENTNASH_DETAIL_MOMENT_REACH_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "momentnash/common.hpp"

namespace momentnash::detail {

inline constexpr long long kStateBudget = 20'000'000;

inline long long pow_checked(long long base, int exp) {
  unsigned __int128 value = 1;
  for (int i = 0; i < exp; ++i) {
    value *= static_cast<unsigned __int128>(base);
    if (value > (static_cast<unsigned __int128>(1) << 62)) {
      throw ResourceError("moment numerator exceeds the integer budget");
    }
  }
  return static_cast<long long>(value);
}

// Mixed-radix packing of nonnegative digit vectors into 64-bit keys. Digit l
// is capped at caps[l]; all digit arithmetic is exact, so state equality is
// exact integer equality.
class DigitLayout {
 public:
  explicit DigitLayout(std::vector<long long> digit_caps)
      : caps_(std::move(digit_caps)) {
    strides_.resize(caps_.size());
    unsigned __int128 stride = 1;
    for (size_t l = 0; l < caps_.size(); ++l) {
      strides_[l] = static_cast<unsigned long long>(stride);
      stride *= static_cast<unsigned __int128>(caps_[l] + 1);
      if (stride > (static_cast<unsigned __int128>(1) << 62)) {
        throw ResourceError("moment state space exceeds the 64-bit budget");
      }
    }
  }

  size_t digits() const { return caps_.size(); }
  const std::vector<long long>& caps() const { return caps_; }

  bool within_caps(const std::vector<long long>& digits_vec) const {
    for (size_t l = 0; l < caps_.size(); ++l) {
      if (digits_vec[l] < 0 || digits_vec[l] > caps_[l]) return false;
    }
    return true;
  }

  std::uint64_t pack(const std::vector<long long>& digits_vec) const {
    std::uint64_t key = 0;
    for (size_t l = 0; l < caps_.size(); ++l) {
      key += static_cast<std::uint64_t>(digits_vec[l]) * strides_[l];
    }
    return key;
  }

  std::vector<long long> unpack(std::uint64_t key) const {
    std::vector<long long> digits_vec(caps_.size());
    for (size_t l = 0; l < caps_.size(); ++l) {
      const unsigned long long radix =
          static_cast<unsigned long long>(caps_[l]) + 1;
      digits_vec[l] = static_cast<long long>(key % radix);
      key /= radix;
    }
    return digits_vec;
  }

 private:
  std::vector<long long> caps_;
  std::vector<unsigned long long> strides_;
};

// Reachable power-sum vectors of multisets drawn from one fixed value set,
// one layer per multiset size. Every slot shares the grid, so the layer sets
// double as suffix-feasibility sets and witness extraction reduces to greedy
// membership lookups.
class UniformReach {
 public:
  UniformReach(std::vector<int> values, int depth, int max_count)
      : values_(std::move(values)),
        depth_(depth),
        max_count_(max_count),
        layout_(make_caps()) {
    contributions_.reserve(values_.size());
    for (int v : values_) {
      std::vector<long long> digits(depth_);
      for (int l = 0; l < depth_; ++l) digits[l] = pow_checked(v, l + 1);
      contributions_.push_back(std::move(digits));
    }
    layers_.resize(max_count_ + 1);
    layers_[0].insert(0);
    long long stored = 1;
    std::vector<std::uint64_t> frontier{0};
    for (int c = 1; c <= max_count_; ++c) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t key : frontier) {
        const std::vector<long long> digits = layout_.unpack(key);
        for (size_t vi = 0; vi < values_.size(); ++vi) {
          std::vector<long long> moved = digits;
          for (int l = 0; l < depth_; ++l) moved[l] += contributions_[vi][l];
          const std::uint64_t moved_key = layout_.pack(moved);
          if (layers_[c].insert(moved_key).second) {
            next.push_back(moved_key);
            if (++stored > kStateBudget) {
              throw ResourceError("moment reachability exceeds state budget");
            }
          }
        }
      }
      frontier = std::move(next);
    }
  }

  int max_count() const { return max_count_; }

  bool achievable(const std::vector<long long>& target, int count) const {
    if (count < 0 || count > max_count_) return false;
    if (!layout_.within_caps(target)) return false;
    return layers_[count].count(layout_.pack(target)) > 0;
  }

  // Lexicographically smallest (hence nondecreasing) multiset of `count`
  // values realizing the target exactly.
  std::optional<std::vector<int>> witness(const std::vector<long long>& target,
                                          int count) const {
    if (!achievable(target, count)) return std::nullopt;
    std::vector<long long> remaining = target;
    std::vector<int> result;
    result.reserve(count);
    for (int slots_left = count; slots_left >= 1; --slots_left) {
      bool advanced = false;
      for (size_t vi = 0; vi < values_.size(); ++vi) {
        std::vector<long long> next = remaining;
        bool nonneg = true;
        for (int l = 0; l < depth_; ++l) {
          next[l] -= contributions_[vi][l];
          if (next[l] < 0) nonneg = false;
        }
        if (!nonneg) continue;
        if (layers_[slots_left - 1].count(layout_.pack(next)) > 0) {
          result.push_back(values_[vi]);
          remaining = std::move(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) throw InternalError("reachable state without witness");
    }
    return result;
  }

  // All power-sum vectors realizable with exactly `count` values, sorted
  // lexicographically.
  std::vector<std::vector<long long>> targets(int count) const {
    std::vector<std::vector<long long>> result;
    if (count < 0 || count > max_count_) return result;
    result.reserve(layers_[count].size());
    for (std::uint64_t key : layers_[count]) {
      result.push_back(layout_.unpack(key));
    }
    std::sort(result.begin(), result.end());
    return result;
  }

 private:
  std::vector<long long> make_caps() const {
    const long long vmax =
        values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
    std::vector<long long> caps(depth_);
    for (int l = 0; l < depth_; ++l) {
      caps[l] = max_count_ * pow_checked(vmax, l + 1);
    }
    return caps;
  }

  std::vector<int> values_;
  int depth_;
  int max_count_;
  DigitLayout layout_;
  std::vector<std::vector<long long>> contributions_;
  std::vector<std::unordered_set<std::uint64_t>> layers_;
};

// Grid numerators j/k2 classified as "low" ((0,1/2]) and "high" ((1/2,1)).
inline std::vector<int> small_numerators(int k2) {
  std::vector<int> values;
  for (int j = 1; 2 * j <= k2; ++j) values.push_back(j);
  return values;
}

inline std::vector<int> big_numerators(int k2) {
  std::vector<int> values;
  for (int j = 1; j <= k2 - 1; ++j) {
    if (2 * j > k2) values.push_back(j);
  }
  return values;
}

inline bool is_small_num(int j, int k2) { return j >= 1 && 2 * j <= k2; }
inline bool is_big_num(int j, int k2) { return 2 * j > k2 && j <= k2 - 1; }

}  // namespace momentnash::detail

#endif  // MOMENTNASH_DETAIL_MOMENT_REACH_HPP_
