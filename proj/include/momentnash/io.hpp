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
// JSON schemas:
//   bimatrix game   {"n": int, "R": [[f]], "C": [[f]]}
//   anonymous game  {"n": int, "u": [{"u0": [f], "u1": [f]}]}
//                   or {"n": int, "gp": {"k": int, "delta": f, "p": [f]}}
//   profiles        {"x": [f], "y": [f]} or {"q": [f]}
// Grid rationals are serialized as {"num": int, "den": int} where exactness
// matters (cover elements, moment targets).

#ifndef MOMENTNASH_IO_HPP_
#define MOMENTNASH_IO_HPP_

#include <string>

#include "json.hpp"

#include "momentnash/bimatrix_ptas.hpp"
#include "momentnash/games.hpp"
#include "momentnash/sparse_cover.hpp"

namespace momentnash {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& value);

Json to_json(const BimatrixGame& game);
BimatrixGame bimatrix_from_json(const Json& j);

Json to_json(const AnonymousGame& game);
AnonymousGame anonymous_from_json(const Json& j);

bool looks_like_bimatrix(const Json& game_json);

Json to_json(const MixedPair& pair);
MixedPair mixed_pair_from_json(const Json& j);

Json to_json(const AnonymousProfile& profile);
AnonymousProfile anonymous_profile_from_json(const Json& j);

Json to_json(const SamplerReport& report);

Json to_json(const Cover& cover);
Cover cover_from_json(const Json& j);

}  // namespace momentnash

#endif  // MOMENTNASH_IO_HPP_
