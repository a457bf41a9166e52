// Copyright 2026 The Snakedet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON forms of the library's values. Every document written here carries
// "schema": 1 at the top level.

#ifndef SNAKEDET_JSON_IO_H_
#define SNAKEDET_JSON_IO_H_

#include <json.hpp>

#include "snakedet/graph.h"
#include "snakedet/matching.h"
#include "snakedet/multipoly.h"
#include "snakedet/snake.h"

namespace snakedet {

inline constexpr int kJsonSchema = 1;

// [{"coeff": 3, "exponents": {"x1": 2}}, ...] in printing order. Coefficients
// outside the int64 range are written as decimal strings.
nlohmann::json PolynomialToJson(const Polynomial& p);
// Accepts the list form, a text string, or a plain integer.
Polynomial PolynomialFromJson(const nlohmann::json& j);

nlohmann::json MatrixToJson(const PolyMatrix& m);  // rows of strings
PolyMatrix MatrixFromJson(const nlohmann::json& j);

// {"n": 4, "edges": [[0,1], ...], "vars": {"0-1": "z3"}}; vars are optional
// polynomial strings keyed by "i-j".
Graph GraphFromJson(const nlohmann::json& j);
nlohmann::json GraphToJson(const Graph& g);

// {"i-j": [tail, head]}.
Orientation OrientationFromJson(const nlohmann::json& j);
nlohmann::json OrientationToJson(const Orientation& o);

nlohmann::json MatchingToJson(const PerfectMatching& m);

// Grid coordinates, labeling, weights and (when present) orientation.
nlohmann::json SnakeToJson(const SnakeGraph& s, const Orientation* o = nullptr);

}  // namespace snakedet

#endif  // SNAKEDET_JSON_IO_H_
