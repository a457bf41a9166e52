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

#include "snakedet/graph.h"

#include <algorithm>
#include <numeric>

#include "snakedet/error.h"

namespace snakedet {
namespace {

std::vector<int> ResolveOrder(int n, std::span<const int> order) {
  std::vector<int> out(n);
  if (order.empty()) {
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex order must list every vertex once");
  }
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    int v = order[k];
    if (v < 0 || v >= n || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vertex order must list every vertex once");
    }
    seen[v] = true;
    out[k] = v;
  }
  return out;
}

std::string PairName(int a, int b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

const Polynomial& ZeroPolynomial() {
  static const Polynomial* zero = new Polynomial;
  return *zero;
}

}  // namespace

VertexPair MakePair(int a, int b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

PolyMatrix PolyMatrix::FromRows(
    const std::vector<std::vector<Polynomial>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  PolyMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

PolyMatrix PolyMatrix::Transpose() const {
  PolyMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::Substitute(
    const std::map<VarId, Polynomial>& values) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    out.data_[k] = data_[k].Substitute(values);
  }
  return out;
}

PolyMatrix PolyMatrix::Permuted(std::span<const int> perm) const {
  PolyMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
  }
  return out;
}

bool IsSkewSymmetric(const PolyMatrix& m) {
  if (!m.square()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (!m(i, i).IsZero()) return false;
    for (int j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != -m(j, i)) return false;
    }
  }
  return true;
}

PolyMatrix BlockSkew(const PolyMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kInvalidArgument, "block needs a square matrix");
  }
  int n = m.rows();
  PolyMatrix b(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b(i, n + j) = m(i, j);
      b(n + j, i) = -m(i, j);
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n_vertices) : n_(n_vertices) {
  if (n_vertices < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
}

void Graph::AddEdge(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge " + PairName(a, b) + " out of range");
  }
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument,
                "loop at vertex " + std::to_string(a));
  }
  VertexPair p = MakePair(a, b);
  edges_.push_back(p);
  PairData& data = pairs_[p];
  if (data.multiplicity++ == 0) {
    data.weight = Polynomial::Variable("z" + std::to_string(p.first) + "_" +
                                       std::to_string(p.second));
  }
}

void Graph::SetWeight(int a, int b, Polynomial weight) {
  auto it = pairs_.find(MakePair(a, b));
  if (it == pairs_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no edge " + PairName(a, b) + " to weight");
  }
  it->second.weight = std::move(weight);
}

std::vector<VertexPair> Graph::SupportPairs() const {
  std::vector<VertexPair> out;
  out.reserve(pairs_.size());
  for (const auto& [p, data] : pairs_) out.push_back(p);
  return out;
}

std::vector<int> Graph::Neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [p, data] : pairs_) {
    if (p.first == v) out.push_back(p.second);
    if (p.second == v) out.push_back(p.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::Multiplicity(int a, int b) const {
  auto it = pairs_.find(MakePair(a, b));
  return it == pairs_.end() ? 0 : it->second.multiplicity;
}

const Polynomial& Graph::Weight(int a, int b) const {
  auto it = pairs_.find(MakePair(a, b));
  return it == pairs_.end() ? ZeroPolynomial() : it->second.weight;
}

Graph Graph::WithUnitWeights() const {
  Graph out = *this;
  for (auto& [p, data] : out.pairs_) data.weight = Polynomial(1);
  return out;
}

Graph Graph::WithoutVertices(const std::vector<bool>& removed) const {
  std::vector<int> relabel(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    if (v >= static_cast<int>(removed.size()) || !removed[v]) {
      relabel[v] = next++;
    }
  }
  Graph out(next);
  for (const auto& [a, b] : edges_) {
    if (relabel[a] >= 0 && relabel[b] >= 0) out.AddEdge(relabel[a], relabel[b]);
  }
  for (const auto& [p, data] : pairs_) {
    if (relabel[p.first] >= 0 && relabel[p.second] >= 0) {
      out.SetWeight(relabel[p.first], relabel[p.second], data.weight);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orientation

void Orientation::Set(int tail, int head) {
  if (tail == head) {
    throw Error(ErrorCode::kInvalidArgument, "cannot orient a loop");
  }
  arrows_[MakePair(tail, head)] = {tail, head};
}

bool Orientation::Has(int a, int b) const {
  return arrows_.count(MakePair(a, b)) > 0;
}

int Orientation::Sign(int a, int b) const {
  auto it = arrows_.find(MakePair(a, b));
  if (it == arrows_.end()) return 0;
  return it->second.first == a ? 1 : -1;
}

std::pair<int, int> Orientation::Arrow(int a, int b) const {
  auto it = arrows_.find(MakePair(a, b));
  if (it == arrows_.end()) {
    throw Error(ErrorCode::kMissingDirection,
                "pair " + PairName(a, b) + " has no direction");
  }
  return it->second;
}

Orientation Orientation::Reversed() const {
  Orientation out;
  for (const auto& [p, arrow] : arrows_) out.Set(arrow.second, arrow.first);
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

PolyMatrix WeightedAdjacency(const Graph& g, std::span<const int> order) {
  std::vector<int> ord = ResolveOrder(g.n_vertices(), order);
  int n = g.n_vertices();
  PolyMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int m = g.Multiplicity(ord[i], ord[j]);
      if (m > 0) a(i, j) = Polynomial(m) * g.Weight(ord[i], ord[j]);
    }
  }
  return a;
}

PolyMatrix SkewAdjacency(const Graph& g, const Orientation& o,
                         std::span<const int> order) {
  std::vector<int> ord = ResolveOrder(g.n_vertices(), order);
  for (const VertexPair& p : g.SupportPairs()) o.Arrow(p.first, p.second);
  int n = g.n_vertices();
  PolyMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int m = g.Multiplicity(ord[i], ord[j]);
      if (m == 0) continue;
      b(i, j) = Polynomial(o.Sign(ord[i], ord[j]) * m) *
                g.Weight(ord[i], ord[j]);
    }
  }
  return b;
}

BiadjMatrix Biadjacency(const Graph& g, const Orientation& o,
                        std::span<const int> u_class,
                        std::span<const int> w_class) {
  if (u_class.size() != w_class.size()) {
    throw Error(ErrorCode::kUnbalancedClasses,
                "classes have sizes " + std::to_string(u_class.size()) +
                    " and " + std::to_string(w_class.size()));
  }
  std::vector<int> side(g.n_vertices(), -1);
  auto assign = [&](std::span<const int> cls, int label) {
    for (int v : cls) {
      if (v < 0 || v >= g.n_vertices() || side[v] != -1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bipartition must list each vertex once");
      }
      side[v] = label;
    }
  };
  assign(u_class, 0);
  assign(w_class, 1);
  if (std::count(side.begin(), side.end(), -1) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "bipartition must cover every vertex");
  }
  for (const VertexPair& p : g.SupportPairs()) {
    if (side[p.first] == side[p.second]) {
      throw Error(ErrorCode::kNotBipartite,
                  "edge " + PairName(p.first, p.second) +
                      " lies inside one class");
    }
  }
  std::vector<int> order(u_class.begin(), u_class.end());
  order.insert(order.end(), w_class.begin(), w_class.end());
  PolyMatrix full = SkewAdjacency(g, o, order);
  int n = static_cast<int>(u_class.size());
  BiadjMatrix out{std::vector<int>(u_class.begin(), u_class.end()),
                  std::vector<int>(w_class.begin(), w_class.end()),
                  PolyMatrix(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.entries(i, j) = full(i, n + j);
  }
  return out;
}

}  // namespace snakedet
