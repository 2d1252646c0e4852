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

#ifndef MOMENTNASH_CLI_HPP_
#define MOMENTNASH_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace momentnash {

// Runs one CLI invocation (args exclude the program name). Exit codes:
//   0  success
//   1  no equilibrium found / no sampler success
//   2  input error (unknown flag, malformed JSON, dimension mismatch, ...)
//   3  resource-budget error
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace momentnash

#endif  // MOMENTNASH_CLI_HPP_
