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

// Seeds of the polygon cluster algebra and expansion by mutation along flips.

#ifndef SNAKEDET_CLUSTER_H_
#define SNAKEDET_CLUSTER_H_

#include <vector>

#include "snakedet/multipoly.h"
#include "snakedet/polygon.h"

namespace snakedet {

inline constexpr int kMaxOraclePolygon = 12;

struct Seed {
  IntMatrix b_matrix;
  std::vector<LaurentExpr> cluster;  // indexed like the diagonal slots
  PolygonTriangulation triangulation;
};

// B(T) with cluster x1, ..., x<n-3>.
Seed InitialSeed(const PolygonTriangulation& t);

// Exchange relation on slot k, matrix mutation, and the flip of diagonal k.
// Throws kNotDivisible if the new variable is not Laurent.
Seed Mutate(const Seed& seed, int k);

// Flip slots leading from t to a triangulation containing arc, found by BFS
// over the flip graph. Neighbours are tried in increasing slot order, or
// decreasing with reverse_order. Empty when the arc is already present.
std::vector<int> FlipPathTo(const PolygonTriangulation& t, const Diagonal& arc,
                            bool reverse_order = false);

// Mutates the initial seed of t along `path` and returns the variable now
// attached to arc. Throws kInvalidArgument if the path does not reach it.
LaurentExpr ExpandAlongPath(const PolygonTriangulation& t,
                            const std::vector<int>& path, const Diagonal& arc);

// Cluster variable of arc in the initial cluster of t, by mutation.
// Throws kSizeCap for polygons above 12 vertices.
LaurentExpr ExpandMutationOracle(const PolygonTriangulation& t,
                                 const Diagonal& arc,
                                 bool reverse_order = false);

}  // namespace snakedet

#endif  // SNAKEDET_CLUSTER_H_
