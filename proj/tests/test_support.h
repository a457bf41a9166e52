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

// Shared helpers for the test binaries: seeded generators and small
// brute-force oracles that do not share code with the library routines.

#ifndef SNAKEDET_TESTS_TEST_SUPPORT_H_
#define SNAKEDET_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "snakedet/graph.h"
#include "snakedet/multipoly.h"
#include "snakedet/snake.h"

namespace snakedet::testing {

inline Polynomial P(const char* text) { return Polynomial::Parse(text); }

// Random polynomial with up to `max_terms` terms over x1..x`n_vars`.
inline Polynomial RandomPolynomial(std::mt19937& rng, int n_vars = 3,
                                   int max_terms = 3, int max_coeff = 3,
                                   int max_exp = 2) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> exp(0, max_exp);
  Polynomial p;
  int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<Monomial::Factor> f;
    for (int v = 1; v <= n_vars; ++v) {
      int e = exp(rng);
      if (e > 0) f.emplace_back(Var("x" + std::to_string(v)), e);
    }
    p += Polynomial::Term(Integer(coeff(rng)), Monomial(std::move(f)));
  }
  return p;
}

inline PolyMatrix RandomMatrix(std::mt19937& rng, int n, int n_vars = 3) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = RandomPolynomial(rng, n_vars, 2);
  }
  return m;
}

inline PolyMatrix RandomSkew(std::mt19937& rng, int n, int n_vars = 3) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = RandomPolynomial(rng, n_vars, 2);
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

inline int PermutationSign(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inv;
    }
  }
  return inv % 2 ? -1 : 1;
}

// Leibniz formula.
inline Polynomial LeibnizDet(const PolyMatrix& m) {
  std::vector<int> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det;
  do {
    Polynomial term(PermutationSign(perm));
    for (int i = 0; i < m.rows() && !term.IsZero(); ++i) term *= m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Laplace expansion along the first row.
inline Polynomial CofactorDet(const PolyMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  Polynomial det;
  for (int j = 0; j < n; ++j) {
    if (m(0, j).IsZero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    Polynomial t = m(0, j) * CofactorDet(minor);
    det += j % 2 ? -t : t;
  }
  return det;
}

// Pfaffian by expansion along the first row:
// pff(A) = sum_{j>0} (-1)^(j+1) a_{0j} pff(A with rows/cols 0, j removed).
inline Polynomial RecursivePfaffian(const PolyMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  Polynomial out;
  for (int j = 1; j < n; ++j) {
    if (m(0, j).IsZero()) continue;
    std::vector<int> keep;
    for (int k = 1; k < n; ++k) {
      if (k != j) keep.push_back(k);
    }
    PolyMatrix sub(n - 2, n - 2);
    for (int a = 0; a < n - 2; ++a) {
      for (int b = 0; b < n - 2; ++b) sub(a, b) = m(keep[a], keep[b]);
    }
    Polynomial t = m(0, j) * RecursivePfaffian(sub);
    out += j % 2 ? t : -t;
  }
  return out;
}

// Counts perfect matchings by trying every subset of edges of size n/2.
inline long BruteForceMatchingCount(const Graph& g) {
  const int n = g.n_vertices();
  const auto& edges = g.edges();
  if (n % 2) return 0;
  const int k = n / 2;
  const int m = static_cast<int>(edges.size());
  if (k > m) return 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  long count = 0;
  do {
    std::vector<int> cover(n, 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!pick[e]) continue;
      ok = ++cover[edges[e].first] == 1 && ++cover[edges[e].second] == 1;
    }
    if (ok) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

inline std::string RandomShape(std::mt19937& rng, int tiles) {
  std::string s;
  std::bernoulli_distribution up(0.5);
  for (int i = 1; i < tiles; ++i) s += up(rng) ? 'U' : 'R';
  return s;
}

// Random orientation of every edge pair of `g`.
inline Orientation RandomOrientation(std::mt19937& rng, const Graph& g) {
  Orientation o;
  std::bernoulli_distribution flip(0.5);
  for (const auto& [a, b] : g.SupportPairs()) {
    if (flip(rng)) {
      o.Set(b, a);
    } else {
      o.Set(a, b);
    }
  }
  return o;
}

// The 4x4 matrix printed for the worked d=3 example.
inline PolyMatrix ExampleMatrix() {
  return PolyMatrix::FromRows({{P("1"), P("0"), P("0"), P("x1")},
                               {P("-x2"), P("x4"), P("1"), P("0")},
                               {P("0"), P("-1"), P("x6"), P("0")},
                               {P("-x3"), P("0"), P("-x5"), P("x4")}});
}

inline Polynomial ExampleDeterminant() {
  return P("x4^2*x6 + x4 + x1*x2*x5 + x1*x3*x4*x6 + x1*x3");
}

// Straight three-tile snake carrying the weights read off ExampleMatrix():
// the edge between u_i and w_j gets |M(i, j)|.
inline SnakeGraph ExampleSnake() {
  SnakeGraph s = SnakeGraph::Build("RR");
  CanonicalLabeling lab = s.Labeling();
  PolyMatrix m = ExampleMatrix();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).IsZero()) continue;
      Polynomial w = m(i, j).LeadingCoefficient() < 0 ? -m(i, j) : m(i, j);
      s.SetWeight(MakePair(lab.u[i], lab.w[j]), w);
    }
  }
  return s;
}

}  // namespace snakedet::testing

#endif  // SNAKEDET_TESTS_TEST_SUPPORT_H_
