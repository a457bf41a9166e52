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

// Snake graphs on the unit grid, their canonical bipartite labeling, and the
// pfaffian orientation built from boundary traversal.

#ifndef SNAKEDET_SNAKE_H_
#define SNAKEDET_SNAKE_H_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "snakedet/graph.h"
#include "snakedet/multipoly.h"

namespace snakedet {

struct GridPoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridPoint&) const = default;
};

enum class TileSide { kBottom, kRight, kTop, kLeft };

struct SnakeEdge {
  VertexPair ends;
  bool internal = false;  // shared by two consecutive tiles
  Polynomial weight;
};

// Orderings of the two color classes (parity of x+y), each listed in
// counterclockwise boundary order from (0,0).
struct CanonicalLabeling {
  std::vector<int> u;
  std::vector<int> w;
};

// d tiles; tile 0 occupies the unit cell at (0,0) and each shape letter
// places the next tile one cell Right or Up. Vertices are numbered in
// counterclockwise boundary order starting at (0,0) then (1,0).
class SnakeGraph {
 public:
  // Throws kInvalidArgument for letters other than R and U.
  static SnakeGraph Build(std::string_view shape);

  int tile_count() const { return static_cast<int>(tiles_.size()); }
  const std::string& shape() const { return shape_; }
  // Lower-left corner of each tile.
  const std::vector<GridPoint>& tiles() const { return tiles_; }
  const std::vector<GridPoint>& vertices() const { return vertices_; }
  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  // Sorted by endpoint pair.
  const std::vector<SnakeEdge>& edges() const { return edges_; }
  int VertexAt(GridPoint p) const;

  VertexPair TileEdge(int tile, TileSide side) const;
  // Edge shared by tiles i and i+1.
  VertexPair GlueEdge(int i) const;

  const Polynomial& Weight(VertexPair e) const;
  void SetWeight(VertexPair e, Polynomial weight);
  void SetTileSideWeight(int tile, TileSide side, Polynomial weight);
  // Every edge weighted by its formal variable "z<a>_<b>".
  void ResetFormalWeights();

  CanonicalLabeling Labeling() const;
  Graph ToGraph() const;

 private:
  SnakeEdge& EdgeRef(VertexPair e);

  std::string shape_;
  std::vector<GridPoint> tiles_;
  std::vector<GridPoint> vertices_;
  std::map<GridPoint, int> index_;
  std::vector<SnakeEdge> edges_;
};

// Boundary edges follow the counterclockwise traversal, internal vertical
// edges point up, internal horizontal edges point left, and the left edge of
// the first tile is then reversed.
Orientation SnakeOrientation(const SnakeGraph& s);

// Biadjacency of SnakeOrientation with rows u and columns w of the canonical
// labeling, entries carrying the snake's current weights.
BiadjMatrix SnakeBiadjacency(const SnakeGraph& s);

// (-1)^((d+1)(d+2)/2).
int CorollarySign(int tile_count);

struct SignMeasurement {
  int epsilon = 0;         // det M = epsilon * phi
  int corollary_sign = 0;  // (-1)^((d+1)(d+2)/2)
  bool matches_corollary = false;
};

// Computes det M and the matching polynomial independently and measures the
// global sign between them. Throws kSignIncoherent when det M is not +-phi.
SignMeasurement MeasureSign(const SnakeGraph& s);

// Every shape word of length d-1.
std::vector<std::string> AllShapes(int tile_count);

}  // namespace snakedet

#endif  // SNAKEDET_SNAKE_H_
