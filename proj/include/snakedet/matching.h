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

#ifndef SNAKEDET_MATCHING_H_
#define SNAKEDET_MATCHING_H_

#include <functional>
#include <vector>

#include "snakedet/graph.h"
#include "snakedet/multipoly.h"
#include "snakedet/snake.h"

namespace snakedet {

// Sorted list of matched pairs of the simple support.
using PerfectMatching = std::vector<VertexPair>;

// Calls `visit` once per perfect matching of s(G), in lexicographic order of
// the sorted pair lists. Branches on the lowest unmatched vertex.
void ForEachPerfectMatching(
    const Graph& g, const std::function<void(const PerfectMatching&)>& visit);

std::vector<PerfectMatching> EnumerateMatchings(const Graph& g);

// Phi(G): matchings of G itself, so parallel edges multiply the count.
Integer CountMatchings(const Graph& g);

bool HasPerfectMatching(const Graph& g);

// Sum over matchings of prod m(i,j) * w(i,j).
Polynomial MatchingPolynomial(const Graph& g);

// Matching polynomial of a snake by peeling tiles in order, tracking the
// matchings that avoid / use the current glue edge. Linear in d.
Polynomial SnakePhi(const SnakeGraph& s);

}  // namespace snakedet

#endif  // SNAKEDET_MATCHING_H_
