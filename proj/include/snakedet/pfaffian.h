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

// The pfaffian as a signed sum over pair partitions, the identities tying it
// to determinants, and pfaffian-orientation checks.

#ifndef SNAKEDET_PFAFFIAN_H_
#define SNAKEDET_PFAFFIAN_H_

#include <optional>
#include <utility>
#include <vector>

#include "snakedet/graph.h"
#include "snakedet/multipoly.h"

namespace snakedet {

inline constexpr int kMaxPfaffianSize = 16;
inline constexpr int kMaxCycleSearchVertices = 14;

// Pairs partitioning {0, ..., 2n-1}. Pairs and the order inside each pair
// may be arbitrary.
struct PairPartition {
  std::vector<std::pair<int, int>> pairs;
};

// Sign of the permutation (i1 j1 i2 j2 ... in jn).
int PartitionSign(const PairPartition& p);

// sgn(sigma_P) * c(i1,j1) * ... * c(in,jn).
Polynomial PartitionTerm(const PolyMatrix& m, const PairPartition& p);

// Sum of PartitionTerm over all pair partitions, generated by pairing the
// smallest unused index first. Partial products that vanish are pruned.
// Throws kInvalidArgument if m is not skew-symmetric, kOddSize, kSizeCap.
Polynomial Pfaffian(const PolyMatrix& m);

// det(m) == Pfaffian(m)^2.
bool CheckCayley(const PolyMatrix& m);

struct BlockPfaffian {
  Polynomial pfaffian;     // pff(((0, M), (-M^T, 0)))
  Polynomial determinant;  // det M
  int sign = 1;            // (-1)^(n(n-1)/2)
  bool sign_ok = false;    // pfaffian == sign * determinant
};

BlockPfaffian BlockPfaffianSign(const PolyMatrix& m);

// Simple cycles of s(G) of even length whose removal leaves a graph with a
// perfect matching. Each cycle starts at its smallest vertex and is listed
// in one direction. Throws kSizeCap beyond 14 vertices.
std::vector<std::vector<int>> EvenNiceCycles(const Graph& g);

// Arrows that agree with walking the cycle v0 -> v1 -> ... -> v0.
int AgreementCount(const std::vector<int>& cycle, const Orientation& o);

struct PfaffianOrientationReport {
  Integer pfaffian_at_one;  // pff(B(1))
  Integer matching_count;   // Phi(G)
  bool by_count = false;    // |pff(B(1))| == Phi(G)
  std::optional<bool> by_cycles;
  int even_nice_cycles = 0;
};

// With verify_cycles, also checks that every even nice cycle is oddly
// oriented and throws std::logic_error if the two tests disagree.
PfaffianOrientationReport CheckPfaffianOrientation(const Graph& g,
                                                   const Orientation& o,
                                                   bool verify_cycles = false);

bool IsPfaffianOrientation(const Graph& g, const Orientation& o,
                           bool verify_cycles = false);

}  // namespace snakedet

#endif  // SNAKEDET_PFAFFIAN_H_
