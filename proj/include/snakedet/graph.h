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

// Loopless multigraphs, pair orientations, and their weighted adjacency
// matrices.

#ifndef SNAKEDET_GRAPH_H_
#define SNAKEDET_GRAPH_H_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snakedet/multipoly.h"

namespace snakedet {

// Unordered vertex pair stored with first < second.
using VertexPair = std::pair<int, int>;
VertexPair MakePair(int a, int b);

// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix FromRows(const std::vector<std::vector<Polynomial>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Polynomial& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(int i, int j) const {
    return data_[i * cols_ + j];
  }

  PolyMatrix Transpose() const;
  PolyMatrix Substitute(const std::map<VarId, Polynomial>& values) const;
  // Simultaneous row and column permutation: out(i,j) = in(perm[i], perm[j]).
  PolyMatrix Permuted(std::span<const int> perm) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial> data_;
};

bool IsSkewSymmetric(const PolyMatrix& m);

// ((0, M), (-M^T, 0)) for square M.
PolyMatrix BlockSkew(const PolyMatrix& m);

// Finite loopless multigraph. Parallel edges between a pair share one weight,
// which defaults to the formal variable "z<i>_<j>".
class Graph {
 public:
  explicit Graph(int n_vertices = 0);

  // Throws kInvalidArgument for loops or out-of-range endpoints.
  void AddEdge(int a, int b);
  void SetWeight(int a, int b, Polynomial weight);

  int n_vertices() const { return n_; }
  // Every edge, parallel copies included, in insertion order.
  const std::vector<VertexPair>& edges() const { return edges_; }
  // Edges of the simple support s(G), sorted.
  std::vector<VertexPair> SupportPairs() const;
  std::vector<int> Neighbors(int v) const;

  int Multiplicity(int a, int b) const;
  // Zero when the pair carries no edge.
  const Polynomial& Weight(int a, int b) const;

  // Same edges with every weight replaced by 1.
  Graph WithUnitWeights() const;
  // Induced subgraph on the vertices not flagged in `removed`, relabelled
  // in increasing order.
  Graph WithoutVertices(const std::vector<bool>& removed) const;

 private:
  struct PairData {
    int multiplicity = 0;
    Polynomial weight;
  };

  int n_;
  std::vector<VertexPair> edges_;
  std::map<VertexPair, PairData> pairs_;
};

// Direction on each edge-carrying vertex pair, hence no oriented 2-cycles.
class Orientation {
 public:
  void Set(int tail, int head);
  bool Has(int a, int b) const;
  // +1 for tail a / head b, -1 for the reverse, 0 when unset.
  int Sign(int a, int b) const;
  // (tail, head); throws kMissingDirection when unset.
  std::pair<int, int> Arrow(int a, int b) const;
  Orientation Reversed() const;

  const std::map<VertexPair, std::pair<int, int>>& arrows() const {
    return arrows_;
  }

 private:
  std::map<VertexPair, std::pair<int, int>> arrows_;
};

// Identity order when `order` is empty; otherwise order[k] is the vertex on
// row/column k.
PolyMatrix WeightedAdjacency(const Graph& g, std::span<const int> order = {});

// b(i,j) = eps(i,j) * m(i,j) * w(i,j). Throws kMissingDirection if an
// edge-carrying pair has no direction.
PolyMatrix SkewAdjacency(const Graph& g, const Orientation& o,
                         std::span<const int> order = {});

struct BiadjMatrix {
  std::vector<int> rows;  // vertices of U
  std::vector<int> cols;  // vertices of W
  PolyMatrix entries;
};

// Upper-right block of SkewAdjacency under the order U then W.
// Throws kUnbalancedClasses or kNotBipartite.
BiadjMatrix Biadjacency(const Graph& g, const Orientation& o,
                        std::span<const int> u_class,
                        std::span<const int> w_class);

}  // namespace snakedet

#endif  // SNAKEDET_GRAPH_H_
