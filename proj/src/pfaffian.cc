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

#include "snakedet/pfaffian.h"

#include <stdexcept>
#include <string>

#include "snakedet/error.h"
#include "snakedet/linalg.h"
#include "snakedet/matching.h"

namespace snakedet {
namespace {

void CheckPfaffianInput(const PolyMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kInvalidArgument, "pfaffian needs a square matrix");
  }
  if (m.rows() % 2 != 0) {
    throw Error(ErrorCode::kOddSize,
                "pfaffian of odd size " + std::to_string(m.rows()));
  }
  if (m.rows() > kMaxPfaffianSize) {
    throw Error(ErrorCode::kSizeCap,
                "pfaffian size " + std::to_string(m.rows()) + " exceeds cap " +
                    std::to_string(kMaxPfaffianSize));
  }
  if (!IsSkewSymmetric(m)) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not skew-symmetric");
  }
}

struct PartitionSum {
  const PolyMatrix& m;
  std::vector<bool> used;
  std::vector<int> sequence;  // i1 j1 i2 j2 ...
  Polynomial total;

  // Inversions contributed by appending v after the current sequence.
  int InversionsWith(int v) const {
    int count = 0;
    for (int s : sequence) count += s > v;
    return count;
  }

  void Run(const Polynomial& partial, int inversions) {
    const int n = m.rows();
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      if (inversions % 2 == 0) {
        total += partial;
      } else {
        total -= partial;
      }
      return;
    }
    used[i] = true;
    int inv_i = InversionsWith(i);
    sequence.push_back(i);
    for (int j = i + 1; j < n; ++j) {
      if (used[j] || m(i, j).IsZero()) continue;
      int inv_j = InversionsWith(j);
      used[j] = true;
      sequence.push_back(j);
      Run(partial * m(i, j), inversions + inv_i + inv_j);
      sequence.pop_back();
      used[j] = false;
    }
    sequence.pop_back();
    used[i] = false;
  }
};

void CycleSearch(const std::vector<std::vector<int>>& adj, int start,
                 std::vector<int>& path, std::vector<bool>& on_path,
                 std::vector<std::vector<int>>& out) {
  int v = path.back();
  for (int w : adj[v]) {
    if (w == start && path.size() >= 3 && path[1] < path.back()) {
      out.push_back(path);
      continue;
    }
    if (w <= start || on_path[w]) continue;
    on_path[w] = true;
    path.push_back(w);
    CycleSearch(adj, start, path, on_path, out);
    path.pop_back();
    on_path[w] = false;
  }
}

}  // namespace

int PartitionSign(const PairPartition& p) {
  std::vector<int> seq;
  seq.reserve(p.pairs.size() * 2);
  for (const auto& [i, j] : p.pairs) {
    seq.push_back(i);
    seq.push_back(j);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) inversions += seq[a] > seq[b];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Polynomial PartitionTerm(const PolyMatrix& m, const PairPartition& p) {
  Polynomial term(PartitionSign(p));
  for (const auto& [i, j] : p.pairs) term *= m(i, j);
  return term;
}

Polynomial Pfaffian(const PolyMatrix& m) {
  CheckPfaffianInput(m);
  PartitionSum sum{m, std::vector<bool>(m.rows(), false), {}, {}};
  sum.sequence.reserve(m.rows());
  sum.Run(Polynomial(1), 0);
  return sum.total;
}

bool CheckCayley(const PolyMatrix& m) {
  Polynomial pff = Pfaffian(m);
  return Determinant(m) == pff * pff;
}

BlockPfaffian BlockPfaffianSign(const PolyMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kInvalidArgument, "block needs a square matrix");
  }
  BlockPfaffian out;
  const long long n = m.rows();
  out.pfaffian = Pfaffian(BlockSkew(m));
  out.determinant = Determinant(m);
  out.sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  out.sign_ok = out.pfaffian == Polynomial(out.sign) * out.determinant;
  return out;
}

std::vector<std::vector<int>> EvenNiceCycles(const Graph& g) {
  const int n = g.n_vertices();
  if (n > kMaxCycleSearchVertices) {
    throw Error(ErrorCode::kSizeCap,
                "cycle search on " + std::to_string(n) + " vertices exceeds " +
                    std::to_string(kMaxCycleSearchVertices));
  }
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.Neighbors(v);
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < n; ++start) {
    std::vector<int> path = {start};
    std::vector<bool> on_path(n, false);
    on_path[start] = true;
    CycleSearch(adj, start, path, on_path, cycles);
  }
  std::vector<std::vector<int>> out;
  for (auto& c : cycles) {
    if (c.size() % 2 != 0) continue;
    std::vector<bool> removed(n, false);
    for (int v : c) removed[v] = true;
    if (HasPerfectMatching(g.WithoutVertices(removed))) out.push_back(c);
  }
  return out;
}

int AgreementCount(const std::vector<int>& cycle, const Orientation& o) {
  int agree = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    int a = cycle[k], b = cycle[(k + 1) % cycle.size()];
    agree += o.Sign(a, b) == 1;
  }
  return agree;
}

PfaffianOrientationReport CheckPfaffianOrientation(const Graph& g,
                                                   const Orientation& o,
                                                   bool verify_cycles) {
  PfaffianOrientationReport report;
  Polynomial pff = Pfaffian(SkewAdjacency(g.WithUnitWeights(), o));
  report.pfaffian_at_one = EvalOnes(pff);
  report.matching_count = CountMatchings(g);
  report.by_count = abs(report.pfaffian_at_one) == report.matching_count;
  if (verify_cycles) {
    bool all_odd = true;
    auto cycles = EvenNiceCycles(g);
    report.even_nice_cycles = static_cast<int>(cycles.size());
    for (const auto& c : cycles) {
      if (AgreementCount(c, o) % 2 == 0) {
        all_odd = false;
        break;
      }
    }
    report.by_cycles = all_odd;
    if (all_odd != report.by_count) {
      throw std::logic_error(
          "pfaffian-orientation tests disagree: count says " +
          std::string(report.by_count ? "yes" : "no") + ", cycles say " +
          (all_odd ? "yes" : "no"));
    }
  }
  return report;
}

bool IsPfaffianOrientation(const Graph& g, const Orientation& o,
                           bool verify_cycles) {
  return CheckPfaffianOrientation(g, o, verify_cycles).by_count;
}

}  // namespace snakedet
