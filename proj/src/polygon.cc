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

#include "snakedet/polygon.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "snakedet/error.h"

namespace snakedet {
namespace {

std::string EdgeName(const Diagonal& d) {
  return std::to_string(d.first) + "-" + std::to_string(d.second);
}

bool IsSide(const PolygonTriangulation& t, int a, int b) {
  return IsBoundaryEdge(t.n(), a, b) || t.Contains(MakePair(a, b));
}

// Counterclockwise distance from `from` to `to`.
int CcwDistance(int n, int from, int to) { return ((to - from) % n + n) % n; }

}  // namespace

bool IsBoundaryEdge(int n, int a, int b) {
  int diff = CcwDistance(n, a, b);
  return diff == 1 || diff == n - 1;
}

bool Crosses(const Diagonal& p, const Diagonal& q) {
  auto [a, b] = MakePair(p.first, p.second);
  auto [c, d] = MakePair(q.first, q.second);
  if (a == c || a == d || b == c || b == d) return false;
  bool c_inside = a < c && c < b;
  bool d_inside = a < d && d < b;
  return c_inside != d_inside;
}

std::vector<Diagonal> AllDiagonals(int n) {
  std::vector<Diagonal> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      if (!IsBoundaryEdge(n, a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string SlotVariableName(int slot) { return "x" + std::to_string(slot + 1); }

// ---------------------------------------------------------------------------
// PolygonTriangulation

PolygonTriangulation::PolygonTriangulation(int n,
                                           std::vector<Diagonal> diagonals)
    : n_(n) {
  if (n < 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "a polygon needs at least 4 vertices, got " + std::to_string(n));
  }
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "a triangulation of the " + std::to_string(n) + "-gon has " +
                    std::to_string(n - 3) + " diagonals, got " +
                    std::to_string(diagonals.size()));
  }
  for (Diagonal& d : diagonals) {
    if (d.first < 0 || d.second < 0 || d.first >= n || d.second >= n ||
        d.first == d.second || IsBoundaryEdge(n, d.first, d.second)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a diagonal of the " + std::to_string(n) +
                      "-gon: " + EdgeName(d));
    }
    d = MakePair(d.first, d.second);
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (diagonals[i] == diagonals[j]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "repeated diagonal " + EdgeName(diagonals[i]));
      }
      if (Crosses(diagonals[i], diagonals[j])) {
        throw Error(ErrorCode::kInvalidArgument,
                    "diagonals " + EdgeName(diagonals[i]) + " and " +
                        EdgeName(diagonals[j]) + " cross");
      }
    }
  }
  diagonals_ = std::move(diagonals);
}

PolygonTriangulation PolygonTriangulation::Fan(int n, int apex) {
  std::vector<Diagonal> d;
  for (int k = 2; k <= n - 2; ++k) d.push_back(MakePair(apex, (apex + k) % n));
  return PolygonTriangulation(n, std::move(d));
}

PolygonTriangulation PolygonTriangulation::Parse(int n,
                                                 std::string_view diagonals) {
  std::vector<Diagonal> out;
  std::string text(diagonals);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(ParseArc(n, item));
  }
  return PolygonTriangulation(n, std::move(out));
}

int PolygonTriangulation::SlotOf(Diagonal d) const {
  d = MakePair(d.first, d.second);
  for (int k = 0; k < size(); ++k) {
    if (diagonals_[k] == d) return k;
  }
  return -1;
}

Polynomial PolygonTriangulation::EdgeWeight(Diagonal e) const {
  if (IsBoundaryEdge(n_, e.first, e.second)) return Polynomial(1);
  int slot = SlotOf(e);
  if (slot < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                EdgeName(e) + " is not an edge of the triangulation");
  }
  return Polynomial::Variable(SlotVariableName(slot));
}

std::vector<std::array<int, 3>> PolygonTriangulation::Triangles() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!IsSide(*this, i, j)) continue;
      for (int k = j + 1; k < n_; ++k) {
        if (IsSide(*this, j, k) && IsSide(*this, i, k)) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

PolygonTriangulation PolygonTriangulation::Flip(int slot) const {
  if (slot < 0 || slot >= size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "flip slot " + std::to_string(slot) + " out of range");
  }
  auto [a, b] = diagonals_[slot];
  std::vector<int> apexes;
  for (const auto& tri : Triangles()) {
    bool has_a = std::find(tri.begin(), tri.end(), a) != tri.end();
    bool has_b = std::find(tri.begin(), tri.end(), b) != tri.end();
    if (!has_a || !has_b) continue;
    for (int v : tri) {
      if (v != a && v != b) apexes.push_back(v);
    }
  }
  if (apexes.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "diagonal " + EdgeName(diagonals_[slot]) +
                    " does not border two triangles");
  }
  PolygonTriangulation out = *this;
  out.diagonals_[slot] = MakePair(apexes[0], apexes[1]);
  return out;
}

std::vector<Diagonal> PolygonTriangulation::Key() const {
  std::vector<Diagonal> key = diagonals_;
  std::sort(key.begin(), key.end());
  return key;
}

std::string PolygonTriangulation::ToString() const {
  std::string out;
  for (const Diagonal& d : diagonals_) {
    if (!out.empty()) out += ',';
    out += EdgeName(d);
  }
  return out;
}

// ---------------------------------------------------------------------------

IntMatrix BMatrix(const PolygonTriangulation& t) {
  const int m = t.size();
  IntMatrix b(m, std::vector<int>(m, 0));
  for (const auto& [i, j, k] : t.Triangles()) {
    // Sides in counterclockwise order; the clockwise successor of each side
    // is the previous one in this list.
    const Diagonal sides[3] = {{i, j}, {j, k}, {i, k}};
    for (int s = 0; s < 3; ++s) {
      int from = t.SlotOf(sides[s]);
      int to = t.SlotOf(sides[(s + 2) % 3]);
      if (from < 0 || to < 0) continue;
      b[from][to] += 1;
      b[to][from] -= 1;
    }
  }
  return b;
}

IntMatrix MutateMatrix(const IntMatrix& b, int k) {
  const int m = static_cast<int>(b.size());
  if (k < 0 || k >= m) {
    throw Error(ErrorCode::kInvalidArgument,
                "mutation index " + std::to_string(k) + " out of range");
  }
  IntMatrix out = b;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] +
                               b[i][k] * std::abs(b[k][j])) /
                                  2;
      }
    }
  }
  return out;
}

std::vector<int> CrossingSequence(const PolygonTriangulation& t,
                                  const Diagonal& arc) {
  const int n = t.n();
  auto [a, b] = arc;
  if (a < 0 || b < 0 || a >= n || b >= n || a == b ||
      IsBoundaryEdge(n, a, b)) {
    throw Error(ErrorCode::kInvalidArgument,
                "arc " + EdgeName(arc) + " is not a diagonal of the " +
                    std::to_string(n) + "-gon");
  }
  // A crossed diagonal has one endpoint on each side of the arc; its
  // position along the arc is ordered by how far those endpoints sit from a.
  // Non-crossing diagonals are totally ordered by the summed distance.
  std::vector<std::pair<int, int>> keyed;  // (distance, slot)
  for (int k = 0; k < t.size(); ++k) {
    const Diagonal& d = t.diagonals()[k];
    if (!Crosses(d, arc)) continue;
    int left = CcwDistance(n, a, d.first) < CcwDistance(n, a, b) ? d.first
                                                                  : d.second;
    int right = left == d.first ? d.second : d.first;
    keyed.emplace_back(CcwDistance(n, a, left) + CcwDistance(n, right, a), k);
  }
  if (keyed.empty()) {
    throw Error(ErrorCode::kArcInTriangulation,
                "arc " + EdgeName(arc) + " belongs to the triangulation");
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) {
      throw Error(ErrorCode::kInvalidArgument,
                  "crossing order is ambiguous for arc " + EdgeName(arc));
    }
    out.push_back(keyed[i].second);
  }
  return out;
}

std::vector<PolygonTriangulation> AllTriangulations(int n) {
  std::vector<PolygonTriangulation> out;
  std::set<std::vector<Diagonal>> seen;
  std::queue<PolygonTriangulation> frontier;
  PolygonTriangulation start = PolygonTriangulation::Fan(n);
  seen.insert(start.Key());
  frontier.push(start);
  while (!frontier.empty()) {
    PolygonTriangulation t = frontier.front();
    frontier.pop();
    for (int k = 0; k < t.size(); ++k) {
      PolygonTriangulation next = t.Flip(k);
      if (seen.insert(next.Key()).second) frontier.push(next);
    }
    out.push_back(std::move(t));
  }
  return out;
}

Diagonal ParseArc(int n, std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw Error(ErrorCode::kParse,
                "expected a-b, got \"" + std::string(text) + "\"");
  }
  int a = 0, b = 0;
  try {
    std::size_t used_a = 0, used_b = 0;
    std::string sa(text.substr(0, dash)), sb(text.substr(dash + 1));
    a = std::stoi(sa, &used_a);
    b = std::stoi(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse,
                "expected a-b, got \"" + std::string(text) + "\"");
  }
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex out of range in \"" + std::string(text) + "\"");
  }
  return {a, b};
}

}  // namespace snakedet
