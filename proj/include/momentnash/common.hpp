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

#ifndef MOMENTNASH_COMMON_HPP_
#define MOMENTNASH_COMMON_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace momentnash {

// A probability counts as "in the support" iff it exceeds this threshold.
// Grid probabilities are exact multiples of 1/k^2 or 1/(kn), so no legitimate
// support mass sits near zero.
inline constexpr double kSupportTol = 1e-12;

// Slack added to inclusive floating-point threshold comparisons so that
// values computed along algebraically equal routes compare as intended.
inline constexpr double kFloatSlack = 1e-9;

// Malformed or inconsistent caller input (dimension mismatch, out-of-range
// parameter, off-grid target, unparsable file).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or dynamic program would exceed its configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A violated internal invariant (e.g. a distribution entry that is negative
// beyond floating-point noise).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Deterministic random generator used everywhere randomness is needed.
//
// The raw stream is std::mt19937_64 (bit-exact across platforms); bounded
// draws use rejection sampling and reals use the top 53 bits, so the derived
// streams are reproducible too (the std distribution adaptors are not
// guaranteed to be portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

  // Identifier recorded in reports produced from this generator.
  static constexpr const char* kAlgorithm = "mt19937_64/rej-u53";

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform draw from {0, ..., n-1}.
  int uniform_int(int n) {
    if (n <= 0) throw InputError("uniform_int: n must be positive");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t reject_from = UINT64_MAX - (UINT64_MAX % un + 1) % un;
    std::uint64_t x = gen_();
    while (x > reject_from) x = gen_();
    return static_cast<int>(x % un);
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_;
};

}  // namespace momentnash

#endif  // MOMENTNASH_COMMON_HPP_
