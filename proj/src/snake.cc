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

#include "snakedet/snake.h"

#include <algorithm>
#include <set>

#include "snakedet/error.h"
#include "snakedet/linalg.h"
#include "snakedet/matching.h"

namespace snakedet {
namespace {

std::pair<GridPoint, GridPoint> SideCorners(GridPoint cell, TileSide side) {
  const int x = cell.x, y = cell.y;
  switch (side) {
    case TileSide::kBottom:
      return {{x, y}, {x + 1, y}};
    case TileSide::kRight:
      return {{x + 1, y}, {x + 1, y + 1}};
    case TileSide::kTop:
      return {{x, y + 1}, {x + 1, y + 1}};
    case TileSide::kLeft:
      return {{x, y}, {x, y + 1}};
  }
  return {};
}

constexpr TileSide kSides[] = {TileSide::kBottom, TileSide::kRight,
                               TileSide::kTop, TileSide::kLeft};

std::string FormalName(VertexPair e) {
  return "z" + std::to_string(e.first) + "_" + std::to_string(e.second);
}

}  // namespace

SnakeGraph SnakeGraph::Build(std::string_view shape) {
  SnakeGraph s;
  s.shape_ = std::string(shape);
  s.tiles_.push_back({0, 0});
  for (char c : shape) {
    GridPoint last = s.tiles_.back();
    if (c == 'R') {
      s.tiles_.push_back({last.x + 1, last.y});
    } else if (c == 'U') {
      s.tiles_.push_back({last.x, last.y + 1});
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "shape letters must be R or U, got '" + std::string(1, c) +
                      "'");
    }
  }

  // Unit segments with the number of tiles containing them.
  std::map<std::pair<GridPoint, GridPoint>, int> segment_tiles;
  for (GridPoint cell : s.tiles_) {
    for (TileSide side : kSides) ++segment_tiles[SideCorners(cell, side)];
  }

  // The boundary of a snake is one cycle through every corner; walk it
  // counterclockwise from (0,0), whose first boundary step is to (1,0).
  std::map<GridPoint, std::vector<GridPoint>> boundary_adj;
  for (const auto& [seg, count] : segment_tiles) {
    if (count == 1) {
      boundary_adj[seg.first].push_back(seg.second);
      boundary_adj[seg.second].push_back(seg.first);
    }
  }
  GridPoint prev{0, 0}, cur{1, 0};
  s.vertices_.push_back(prev);
  while (!(cur == GridPoint{0, 0})) {
    s.vertices_.push_back(cur);
    const auto& nbrs = boundary_adj.at(cur);
    GridPoint next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  for (int i = 0; i < static_cast<int>(s.vertices_.size()); ++i) {
    s.index_[s.vertices_[i]] = i;
  }
  if (s.vertices_.size() != boundary_adj.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "snake boundary is not a single cycle");
  }

  for (const auto& [seg, count] : segment_tiles) {
    SnakeEdge e;
    e.ends = MakePair(s.index_.at(seg.first), s.index_.at(seg.second));
    e.internal = count == 2;
    e.weight = Polynomial::Variable(FormalName(e.ends));
    s.edges_.push_back(std::move(e));
  }
  std::sort(s.edges_.begin(), s.edges_.end(),
            [](const SnakeEdge& a, const SnakeEdge& b) {
              return a.ends < b.ends;
            });
  return s;
}

int SnakeGraph::VertexAt(GridPoint p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no snake vertex at (" + std::to_string(p.x) + "," +
                    std::to_string(p.y) + ")");
  }
  return it->second;
}

VertexPair SnakeGraph::TileEdge(int tile, TileSide side) const {
  if (tile < 0 || tile >= tile_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "tile " + std::to_string(tile) + " out of range");
  }
  auto [a, b] = SideCorners(tiles_[tile], side);
  return MakePair(VertexAt(a), VertexAt(b));
}

VertexPair SnakeGraph::GlueEdge(int i) const {
  if (i < 0 || i + 1 >= tile_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "glue edge " + std::to_string(i) + " out of range");
  }
  return TileEdge(i, shape_[i] == 'R' ? TileSide::kRight : TileSide::kTop);
}

SnakeEdge& SnakeGraph::EdgeRef(VertexPair e) {
  e = MakePair(e.first, e.second);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const SnakeEdge& a, const VertexPair& p) { return a.ends < p; });
  if (it == edges_.end() || it->ends != e) {
    throw Error(ErrorCode::kInvalidArgument,
                "no snake edge " + std::to_string(e.first) + "-" +
                    std::to_string(e.second));
  }
  return *it;
}

const Polynomial& SnakeGraph::Weight(VertexPair e) const {
  return const_cast<SnakeGraph*>(this)->EdgeRef(e).weight;
}

void SnakeGraph::SetWeight(VertexPair e, Polynomial weight) {
  EdgeRef(e).weight = std::move(weight);
}

void SnakeGraph::SetTileSideWeight(int tile, TileSide side,
                                   Polynomial weight) {
  SetWeight(TileEdge(tile, side), std::move(weight));
}

void SnakeGraph::ResetFormalWeights() {
  for (SnakeEdge& e : edges_) e.weight = Polynomial::Variable(FormalName(e.ends));
}

CanonicalLabeling SnakeGraph::Labeling() const {
  CanonicalLabeling out;
  for (int i = 0; i < n_vertices(); ++i) {
    const GridPoint& p = vertices_[i];
    ((p.x + p.y) % 2 == 0 ? out.u : out.w).push_back(i);
  }
  return out;
}

Graph SnakeGraph::ToGraph() const {
  Graph g(n_vertices());
  for (const SnakeEdge& e : edges_) {
    g.AddEdge(e.ends.first, e.ends.second);
    g.SetWeight(e.ends.first, e.ends.second, e.weight);
  }
  return g;
}

Orientation SnakeOrientation(const SnakeGraph& s) {
  Orientation o;
  const auto& pts = s.vertices();
  for (const SnakeEdge& e : s.edges()) {
    auto [a, b] = e.ends;
    if (!e.internal) {
      // Consecutive in the counterclockwise traversal, possibly wrapping.
      if (b == a + 1) {
        o.Set(a, b);
      } else {
        o.Set(b, a);
      }
      continue;
    }
    const GridPoint &pa = pts[a], &pb = pts[b];
    if (pa.x == pb.x) {
      o.Set(pa.y < pb.y ? a : b, pa.y < pb.y ? b : a);
    } else {
      o.Set(pa.x > pb.x ? a : b, pa.x > pb.x ? b : a);
    }
  }
  VertexPair left = s.TileEdge(0, TileSide::kLeft);
  auto [tail, head] = o.Arrow(left.first, left.second);
  o.Set(head, tail);
  return o;
}

BiadjMatrix SnakeBiadjacency(const SnakeGraph& s) {
  CanonicalLabeling lab = s.Labeling();
  return Biadjacency(s.ToGraph(), SnakeOrientation(s), lab.u, lab.w);
}

int CorollarySign(int tile_count) {
  long long e = static_cast<long long>(tile_count + 1) * (tile_count + 2) / 2;
  return e % 2 == 0 ? 1 : -1;
}

SignMeasurement MeasureSign(const SnakeGraph& s) {
  SnakeGraph formal = s;
  formal.ResetFormalWeights();
  Polynomial det = Determinant(SnakeBiadjacency(formal).entries);
  Polynomial phi = SnakePhi(formal);
  SignMeasurement out;
  if (det == phi) {
    out.epsilon = 1;
  } else if (det == -phi) {
    out.epsilon = -1;
  } else {
    throw Error(ErrorCode::kSignIncoherent,
                "det M is not +-phi for shape \"" + s.shape() + "\"");
  }
  out.corollary_sign = CorollarySign(s.tile_count());
  out.matches_corollary = out.epsilon == out.corollary_sign;
  return out;
}

std::vector<std::string> AllShapes(int tile_count) {
  if (tile_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "a snake needs at least one tile");
  }
  int len = tile_count - 1;
  std::vector<std::string> out;
  for (long long bits = 0; bits < (1LL << len); ++bits) {
    std::string w(len, 'R');
    for (int i = 0; i < len; ++i) {
      if ((bits >> (len - 1 - i)) & 1) w[i] = 'U';
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace snakedet
