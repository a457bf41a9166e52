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

// Triangulations of a convex polygon with vertices 0..n-1 in counterclockwise
// order, their flips, signed adjacency matrices, and arc crossings.

#ifndef SNAKEDET_POLYGON_H_
#define SNAKEDET_POLYGON_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "snakedet/graph.h"
#include "snakedet/multipoly.h"

namespace snakedet {

using Diagonal = VertexPair;
using IntMatrix = std::vector<std::vector<int>>;

bool IsBoundaryEdge(int n, int a, int b);
// Strict interior intersection of two chords of the convex n-gon.
bool Crosses(const Diagonal& p, const Diagonal& q);
std::vector<Diagonal> AllDiagonals(int n);

// n - 3 pairwise non-crossing diagonals. Slot k carries the initial cluster
// variable x<k+1>; flips keep the slot and replace the diagonal.
class PolygonTriangulation {
 public:
  // Throws kInvalidArgument unless the diagonals triangulate the n-gon.
  PolygonTriangulation(int n, std::vector<Diagonal> diagonals);

  static PolygonTriangulation Fan(int n, int apex = 0);
  // "0-2,0-3,0-4".
  static PolygonTriangulation Parse(int n, std::string_view diagonals);

  int n() const { return n_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }
  int size() const { return static_cast<int>(diagonals_.size()); }
  // Slot of d, or -1.
  int SlotOf(Diagonal d) const;
  bool Contains(Diagonal d) const { return SlotOf(d) >= 0; }

  // Variable of the polygon side or diagonal e: 1 for boundary edges, x<k+1>
  // for the diagonal in slot k.
  Polynomial EdgeWeight(Diagonal e) const;

  // Vertex triples i < j < k, sorted.
  std::vector<std::array<int, 3>> Triangles() const;
  // Replaces the diagonal in `slot` by the other diagonal of its quadrilateral.
  PolygonTriangulation Flip(int slot) const;
  // Sorted diagonal set; equal for triangulations that differ only in slots.
  std::vector<Diagonal> Key() const;

  std::string ToString() const;

 private:
  int n_;
  std::vector<Diagonal> diagonals_;
};

std::string SlotVariableName(int slot);

// Signed adjacency: each triangle adds +1 at (s, t) when side t follows
// side s clockwise, with both sides diagonals.
IntMatrix BMatrix(const PolygonTriangulation& t);

// Matrix mutation in direction k.
IntMatrix MutateMatrix(const IntMatrix& b, int k);

// Slots of the diagonals crossed by the arc, ordered from arc.first to
// arc.second. Throws kInvalidArgument for boundary edges or bad endpoints and
// kArcInTriangulation when the arc crosses nothing.
std::vector<int> CrossingSequence(const PolygonTriangulation& t,
                                  const Diagonal& arc);

// Every triangulation reachable by flips from the fan, in BFS order.
std::vector<PolygonTriangulation> AllTriangulations(int n);

// "a-b" with a < b, or as given for arcs.
Diagonal ParseArc(int n, std::string_view text);

}  // namespace snakedet

#endif  // SNAKEDET_POLYGON_H_
