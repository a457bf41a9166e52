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

#ifndef SNAKEDET_LINALG_H_
#define SNAKEDET_LINALG_H_

#include "snakedet/graph.h"
#include "snakedet/multipoly.h"

namespace snakedet {

inline constexpr int kMaxDeterminantSize = 24;

// Exact determinant by row-wise expansion with the partial products memoized
// on the set of used columns. Division-free; zero entries are skipped, so
// sparse matrices only visit reachable column sets.
// Throws kInvalidArgument for non-square input and kSizeCap beyond 24.
Polynomial Determinant(const PolyMatrix& m);

}  // namespace snakedet

#endif  // SNAKEDET_LINALG_H_
