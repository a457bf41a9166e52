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

#include "snakedet/matching.h"

#include <array>

#include "snakedet/error.h"

namespace snakedet {
namespace {

void Extend(const std::vector<std::vector<int>>& adj, std::vector<bool>& used,
            int first_free, PerfectMatching& current,
            const std::function<void(const PerfectMatching&)>& visit) {
  const int n = static_cast<int>(used.size());
  int v = first_free;
  while (v < n && used[v]) ++v;
  if (v == n) {
    visit(current);
    return;
  }
  used[v] = true;
  for (int w : adj[v]) {
    if (used[w]) continue;
    used[w] = true;
    current.emplace_back(v, w);
    Extend(adj, used, v + 1, current, visit);
    current.pop_back();
    used[w] = false;
  }
  used[v] = false;
}

}  // namespace

void ForEachPerfectMatching(
    const Graph& g, const std::function<void(const PerfectMatching&)>& visit) {
  const int n = g.n_vertices();
  if (n % 2 != 0) return;
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.Neighbors(v);
  std::vector<bool> used(n, false);
  PerfectMatching current;
  current.reserve(n / 2);
  Extend(adj, used, 0, current, visit);
}

std::vector<PerfectMatching> EnumerateMatchings(const Graph& g) {
  std::vector<PerfectMatching> out;
  ForEachPerfectMatching(g, [&](const PerfectMatching& m) { out.push_back(m); });
  return out;
}

Integer CountMatchings(const Graph& g) {
  Integer total = 0;
  ForEachPerfectMatching(g, [&](const PerfectMatching& m) {
    Integer ways = 1;
    for (const auto& [a, b] : m) ways *= g.Multiplicity(a, b);
    total += ways;
  });
  return total;
}

bool HasPerfectMatching(const Graph& g) {
  // TODO: stop at the first matching instead of walking all of them.
  return CountMatchings(g) > 0;
}

Polynomial MatchingPolynomial(const Graph& g) {
  Polynomial total;
  ForEachPerfectMatching(g, [&](const PerfectMatching& m) {
    Polynomial term(1);
    for (const auto& [a, b] : m) {
      term *= Polynomial(g.Multiplicity(a, b)) * g.Weight(a, b);
    }
    total += term;
  });
  return total;
}

Polynomial SnakePhi(const SnakeGraph& s) {
  const auto& tiles = s.tiles();
  auto weight = [&](GridPoint p, GridPoint q) -> const Polynomial& {
    return s.Weight({s.VertexAt(p), s.VertexAt(q)});
  };
  // Corner of `cell` adjacent to `from` along the tile, other than `avoid`.
  auto step = [](GridPoint cell, GridPoint from, GridPoint avoid) {
    std::array<GridPoint, 4> ring = {GridPoint{cell.x, cell.y},
                                     GridPoint{cell.x + 1, cell.y},
                                     GridPoint{cell.x + 1, cell.y + 1},
                                     GridPoint{cell.x, cell.y + 1}};
    for (int k = 0; k < 4; ++k) {
      if (ring[k] == from) {
        GridPoint fwd = ring[(k + 1) % 4], back = ring[(k + 3) % 4];
        return fwd == avoid ? back : fwd;
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "corner not on tile");
  };

  // (a, b) is the edge through which the current tile attaches; `with_ab`
  // sums matchings of everything so far, `without_ab` those of everything
  // so far minus a and b. Seeded with the left edge of the first tile.
  GridPoint a{0, 0}, b{0, 1};
  Polynomial with_ab = weight(a, b);
  Polynomial without_ab(1);
  for (int i = 0; i < s.tile_count(); ++i) {
    GridPoint p = step(tiles[i], a, b);
    GridPoint q = step(tiles[i], b, a);
    Polynomial next_with =
        weight(p, q) * with_ab + weight(a, p) * weight(b, q) * without_ab;
    if (i + 1 == s.tile_count()) return next_with;
    VertexPair glue = s.GlueEdge(i);
    int ia = s.VertexAt(a), ib = s.VertexAt(b);
    int ip = s.VertexAt(p), iq = s.VertexAt(q);
    Polynomial next_without;
    if (glue == MakePair(ip, iq)) {
      next_without = with_ab;
      a = p;
      b = q;
    } else if (glue == MakePair(ia, ip)) {
      next_without = weight(b, q) * without_ab;
      b = p;
    } else if (glue == MakePair(ib, iq)) {
      next_without = weight(a, p) * without_ab;
      a = q;
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "glue edge does not leave the current tile");
    }
    with_ab = std::move(next_with);
    without_ab = std::move(next_without);
  }
  return with_ab;
}

}  // namespace snakedet
