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

#include "snakedet/expansion.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "snakedet/cluster.h"
#include "snakedet/error.h"
#include "snakedet/linalg.h"
#include "snakedet/matching.h"

namespace snakedet {
namespace {

using Triangle = std::array<int, 3>;

std::string EdgeName(const Diagonal& d) {
  return std::to_string(d.first) + "-" + std::to_string(d.second);
}

int SharedVertex(const Diagonal& p, const Diagonal& q) {
  if (p.first == q.first || p.first == q.second) return p.first;
  if (p.second == q.first || p.second == q.second) return p.second;
  throw Error(ErrorCode::kInvalidArgument, "consecutive crossed diagonals " +
                                               EdgeName(p) + " and " +
                                               EdgeName(q) +
                                               " share no triangle");
}

Triangle MakeTriangle(int a, int b, int c) {
  Triangle t = {a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::array<Diagonal, 3> SidesOf(const Triangle& t) {
  return {MakePair(t[0], t[1]), MakePair(t[1], t[2]), MakePair(t[0], t[2])};
}

bool Disjoint(const Diagonal& p, const Diagonal& q) {
  return p.first != q.first && p.first != q.second && p.second != q.first &&
         p.second != q.second;
}

// The side of quadrilateral `quad` sharing no vertex with `side`.
Diagonal OppositeIn(const std::vector<Diagonal>& quad, const Diagonal& side) {
  for (const Diagonal& s : quad) {
    if (s != side && Disjoint(s, side)) return s;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "side " + EdgeName(side) + " has no opposite in its quadrilateral");
}

TileSide OppositeSide(TileSide s) {
  switch (s) {
    case TileSide::kBottom:
      return TileSide::kTop;
    case TileSide::kTop:
      return TileSide::kBottom;
    case TileSide::kLeft:
      return TileSide::kRight;
    case TileSide::kRight:
      return TileSide::kLeft;
  }
  return s;
}

// Places the quadrilateral's sides on one tile so that opposite sides stay
// opposite, starting from the glue sides already fixed in `placed`.
void PlaceTileSides(const std::vector<Diagonal>& quad,
                    std::map<TileSide, Diagonal>& placed) {
  std::map<TileSide, Diagonal> fixed = placed;
  for (const auto& [side, edge] : fixed) {
    Diagonal opp = OppositeIn(quad, edge);
    auto [it, inserted] = placed.emplace(OppositeSide(side), opp);
    if (!inserted && it->second != opp) {
      throw Error(ErrorCode::kInvalidArgument,
                  "glue sides " + EdgeName(edge) + " and " +
                      EdgeName(it->second) +
                      " are not opposite in their quadrilateral");
    }
  }
  std::vector<Diagonal> rest;
  for (const Diagonal& s : quad) {
    bool used = false;
    for (const auto& [side, edge] : placed) used = used || edge == s;
    if (!used) rest.push_back(s);
  }
  std::sort(rest.begin(), rest.end());
  if (rest.empty()) return;
  // Free opposite pair: the smaller side goes bottom (or left).
  TileSide first = placed.count(TileSide::kBottom) ? TileSide::kLeft
                                                   : TileSide::kBottom;
  placed[first] = rest[0];
  placed[OppositeSide(first)] = OppositeIn(quad, rest[0]);
  if (rest.size() == 4) {
    std::vector<Diagonal> last;
    for (const Diagonal& s : rest) {
      if (s != rest[0] && s != placed[OppositeSide(first)]) last.push_back(s);
    }
    placed[TileSide::kLeft] = last[0];
    placed[TileSide::kRight] = last[1];
  }
}

}  // namespace

WeightedSnake MswSnake(const PolygonTriangulation& t, const Diagonal& arc) {
  std::vector<int> slots = CrossingSequence(t, arc);
  const int d = static_cast<int>(slots.size());
  std::vector<Diagonal> crossed;
  for (int k : slots) crossed.push_back(t.diagonals()[k]);

  // Triangles met by the arc: one before each crossing and one after the last.
  std::vector<Triangle> tris;
  tris.push_back(MakeTriangle(arc.first, crossed[0].first, crossed[0].second));
  for (int i = 0; i + 1 < d; ++i) {
    int shared = SharedVertex(crossed[i], crossed[i + 1]);
    int u = crossed[i].first == shared ? crossed[i].second : crossed[i].first;
    int v = crossed[i + 1].first == shared ? crossed[i + 1].second
                                           : crossed[i + 1].first;
    tris.push_back(MakeTriangle(shared, u, v));
  }
  tris.push_back(
      MakeTriangle(arc.second, crossed[d - 1].first, crossed[d - 1].second));
  auto all = t.Triangles();
  std::set<Triangle> present(all.begin(), all.end());
  for (const Triangle& tri : tris) {
    if (!present.count(tri)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "arc passes through a non-triangle region");
    }
  }

  // Quadrilateral around each crossed diagonal, and the glue sides.
  std::vector<std::vector<Diagonal>> quads(d);
  for (int i = 0; i < d; ++i) {
    for (const Triangle& tri : {tris[i], tris[i + 1]}) {
      for (const Diagonal& s : SidesOf(tri)) {
        if (s != crossed[i]) quads[i].push_back(s);
      }
    }
  }
  std::vector<Diagonal> glue;
  for (int i = 0; i + 1 < d; ++i) {
    for (const Diagonal& s : SidesOf(tris[i + 1])) {
      if (s != crossed[i] && s != crossed[i + 1]) glue.push_back(s);
    }
  }

  std::string shape;
  for (int i = 0; i + 1 < d; ++i) {
    if (i == 0) {
      shape += 'R';
      continue;
    }
    bool straight = OppositeIn(quads[i], glue[i - 1]) == glue[i];
    bool fan = SharedVertex(crossed[i - 1], crossed[i]) ==
               SharedVertex(crossed[i], crossed[i + 1]);
    if (straight == fan) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tile " + std::to_string(i) +
                      ": glue oppositeness disagrees with the shared-vertex "
                      "rule");
    }
    char prev = shape.back();
    shape += straight ? prev : (prev == 'R' ? 'U' : 'R');
  }

  WeightedSnake out{SnakeGraph::Build(shape), Monomial(), slots};
  for (int i = 0; i < d; ++i) {
    std::map<TileSide, Diagonal> placed;
    if (i > 0) {
      placed[shape[i - 1] == 'R' ? TileSide::kLeft : TileSide::kBottom] =
          glue[i - 1];
    }
    if (i + 1 < d) {
      placed[shape[i] == 'R' ? TileSide::kRight : TileSide::kTop] = glue[i];
    }
    PlaceTileSides(quads[i], placed);
    for (const auto& [side, edge] : placed) {
      out.snake.SetTileSideWeight(i, side, t.EdgeWeight(edge));
    }
  }
  for (int k : slots) {
    out.cross_den = out.cross_den * Monomial::Of(Var(SlotVariableName(k)));
  }
  return out;
}

DetExpansion ExpandDetDetailed(const PolygonTriangulation& t,
                               const Diagonal& arc, int max_tiles) {
  WeightedSnake ws = MswSnake(t, arc);
  const int d = ws.snake.tile_count();
  if (d > max_tiles) {
    throw Error(ErrorCode::kSizeCap, "snake has " + std::to_string(d) +
                                         " tiles, cap is " +
                                         std::to_string(max_tiles));
  }
  Polynomial det = Determinant(SnakeBiadjacency(ws.snake).entries);
  bool all_pos = !det.IsZero(), all_neg = !det.IsZero();
  for (const auto& [m, c] : det.terms()) {
    all_pos = all_pos && c > 0;
    all_neg = all_neg && c < 0;
  }
  if (!all_pos && !all_neg) {
    throw Error(ErrorCode::kSignIncoherent,
                "det M has mixed coefficient signs: " + det.ToString());
  }
  DetExpansion out;
  out.tiles = d;
  out.shape = ws.snake.shape();
  out.sign_applied = all_pos ? 1 : -1;
  SignMeasurement measured = MeasureSign(ws.snake);
  out.sign_measured = measured.epsilon;
  out.sign_corollary = measured.corollary_sign;
  if (out.sign_applied != out.sign_measured) {
    throw Error(ErrorCode::kSignIncoherent,
                "positivity sign differs from the measured sign");
  }
  out.value = LaurentExpr(Polynomial(out.sign_applied) * det, ws.cross_den);
  return out;
}

LaurentExpr ExpandDet(const PolygonTriangulation& t, const Diagonal& arc) {
  return ExpandDetDetailed(t, arc).value;
}

LaurentExpr ExpandMatchings(const PolygonTriangulation& t,
                            const Diagonal& arc) {
  WeightedSnake ws = MswSnake(t, arc);
  return LaurentExpr(MatchingPolynomial(ws.snake.ToGraph()), ws.cross_den);
}

SweepReport VerifyPolygon(int n) {
  SweepReport report;
  report.n = n;
  auto triangulations = AllTriangulations(n);
  report.triangulations = static_cast<int>(triangulations.size());
  for (const PolygonTriangulation& t : triangulations) {
    for (const Diagonal& arc : AllDiagonals(n)) {
      if (t.Contains(arc)) continue;
      ++report.pairs;
      LaurentExpr by_det = ExpandDet(t, arc);
      LaurentExpr by_matchings = ExpandMatchings(t, arc);
      LaurentExpr by_mutation = ExpandMutationOracle(t, arc);
      if (by_det == by_matchings && by_matchings == by_mutation) {
        ++report.agreements;
      } else {
        report.failures.push_back("T={" + t.ToString() + "} arc " +
                                  EdgeName(arc) + ": det " +
                                  by_det.ToString() + ", matchings " +
                                  by_matchings.ToString() + ", mutation " +
                                  by_mutation.ToString());
      }
    }
  }
  return report;
}

}  // namespace snakedet
