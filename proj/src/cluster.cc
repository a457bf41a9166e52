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

#include "snakedet/cluster.h"

#include <map>
#include <queue>
#include <string>

#include "snakedet/error.h"

namespace snakedet {

Seed InitialSeed(const PolygonTriangulation& t) {
  Seed seed{BMatrix(t), {}, t};
  for (int k = 0; k < t.size(); ++k) {
    seed.cluster.emplace_back(Polynomial::Variable(SlotVariableName(k)));
  }
  return seed;
}

Seed Mutate(const Seed& seed, int k) {
  const int m = static_cast<int>(seed.cluster.size());
  if (k < 0 || k >= m) {
    throw Error(ErrorCode::kInvalidArgument,
                "mutation index " + std::to_string(k) + " out of range");
  }
  LaurentExpr positive(Polynomial(1)), negative(Polynomial(1));
  for (int j = 0; j < m; ++j) {
    int e = seed.b_matrix[k][j];
    LaurentExpr& target = e > 0 ? positive : negative;
    for (int r = 0; r < std::abs(e); ++r) target = target * seed.cluster[j];
  }
  Seed out{MutateMatrix(seed.b_matrix, k), seed.cluster,
           seed.triangulation.Flip(k)};
  out.cluster[k] = (positive + negative).DivideBy(seed.cluster[k]);
  return out;
}

std::vector<int> FlipPathTo(const PolygonTriangulation& t, const Diagonal& arc,
                            bool reverse_order) {
  if (t.Contains(arc)) return {};
  struct Visit {
    std::vector<Diagonal> parent;
    int slot;
  };
  std::map<std::vector<Diagonal>, Visit> visited;
  std::queue<PolygonTriangulation> frontier;
  visited.emplace(t.Key(), Visit{{}, -1});
  frontier.push(t);
  while (!frontier.empty()) {
    PolygonTriangulation cur = frontier.front();
    frontier.pop();
    for (int i = 0; i < cur.size(); ++i) {
      int k = reverse_order ? cur.size() - 1 - i : i;
      PolygonTriangulation next = cur.Flip(k);
      if (!visited.emplace(next.Key(), Visit{cur.Key(), k}).second) continue;
      if (next.Contains(arc)) {
        std::vector<int> path;
        for (auto key = next.Key(); key != t.Key();) {
          const Visit& v = visited.at(key);
          path.push_back(v.slot);
          key = v.parent;
        }
        return {path.rbegin(), path.rend()};
      }
      frontier.push(std::move(next));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "arc is not reachable by flips");
}

LaurentExpr ExpandAlongPath(const PolygonTriangulation& t,
                            const std::vector<int>& path, const Diagonal& arc) {
  Seed seed = InitialSeed(t);
  for (int k : path) seed = Mutate(seed, k);
  int slot = seed.triangulation.SlotOf(arc);
  if (slot < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "flip path does not produce the arc");
  }
  return seed.cluster[slot];
}

LaurentExpr ExpandMutationOracle(const PolygonTriangulation& t,
                                 const Diagonal& arc, bool reverse_order) {
  if (t.n() > kMaxOraclePolygon) {
    throw Error(ErrorCode::kSizeCap,
                "mutation oracle is capped at " +
                    std::to_string(kMaxOraclePolygon) + " vertices");
  }
  if (arc.first == arc.second || IsBoundaryEdge(t.n(), arc.first, arc.second)) {
    throw Error(ErrorCode::kInvalidArgument, "arc must be a diagonal");
  }
  return ExpandAlongPath(t, FlipPathTo(t, arc, reverse_order), arc);
}

}  // namespace snakedet
