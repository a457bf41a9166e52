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

#include "snakedet/linalg.h"

#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "snakedet/error.h"

namespace snakedet {

Polynomial Determinant(const PolyMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kInvalidArgument,
                "determinant of a " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix");
  }
  const int n = m.rows();
  if (n > kMaxDeterminantSize) {
    throw Error(ErrorCode::kSizeCap,
                "determinant size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxDeterminantSize));
  }
  if (n == 0) return Polynomial(1);

  // layer[mask] = signed sum over injective maps rows 0..r-1 -> mask.
  // Ordered map keeps the accumulation order deterministic.
  std::map<std::uint32_t, Polynomial> layer;
  layer.emplace(0u, Polynomial(1));
  for (int r = 0; r < n; ++r) {
    std::map<std::uint32_t, Polynomial> next;
    for (const auto& [mask, partial] : layer) {
      for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1u) continue;
        const Polynomial& entry = m(r, j);
        if (entry.IsZero()) continue;
        // Inversions added by placing column j after the used columns > j.
        int inversions = std::popcount(mask >> (j + 1));
        Polynomial term = partial * entry;
        Polynomial& slot = next[mask | (1u << j)];
        if (inversions % 2 == 0) {
          slot += term;
        } else {
          slot -= term;
        }
      }
    }
    layer = std::move(next);
    if (layer.empty()) return Polynomial();
  }
  auto it = layer.find((n == 32) ? ~0u : ((1u << n) - 1));
  return it == layer.end() ? Polynomial() : it->second;
}

}  // namespace snakedet
