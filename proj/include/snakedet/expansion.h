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

// Cluster expansions of polygon arcs through weighted snake graphs: by
// perfect matchings and by the determinant of the oriented biadjacency
// matrix.

#ifndef SNAKEDET_EXPANSION_H_
#define SNAKEDET_EXPANSION_H_

#include <string>
#include <vector>

#include "snakedet/multipoly.h"
#include "snakedet/polygon.h"
#include "snakedet/snake.h"

namespace snakedet {

inline constexpr int kDefaultMaxTiles = 20;

struct WeightedSnake {
  SnakeGraph snake;
  Monomial cross_den;        // product of the crossed diagonals' variables
  std::vector<int> crossed;  // slots, in crossing order
};

// One tile per crossed diagonal, glued along the third side of the triangle
// shared by consecutive crossed diagonals. The first gluing goes right; later
// gluings keep direction when the two glue sides of a tile are opposite in
// its quadrilateral and turn otherwise. Polygon sides weigh 1, diagonals
// their variable.
WeightedSnake MswSnake(const PolygonTriangulation& t, const Diagonal& arc);

struct DetExpansion {
  LaurentExpr value;
  int tiles = 0;
  std::string shape;
  int sign_applied = 0;    // sign making the numerator positive
  int sign_measured = 0;   // epsilon from MeasureSign
  int sign_corollary = 0;  // (-1)^((d+1)(d+2)/2)
};

// det M over cross(arc), sign-corrected to a positive numerator and checked
// against the measured sign. Throws kSizeCap above max_tiles tiles and
// kSignIncoherent if the numerator has mixed signs.
DetExpansion ExpandDetDetailed(const PolygonTriangulation& t,
                               const Diagonal& arc,
                               int max_tiles = kDefaultMaxTiles);
LaurentExpr ExpandDet(const PolygonTriangulation& t, const Diagonal& arc);

// Matching polynomial of the weighted snake over cross(arc).
LaurentExpr ExpandMatchings(const PolygonTriangulation& t, const Diagonal& arc);

struct SweepReport {
  int n = 0;
  int triangulations = 0;
  int pairs = 0;
  int agreements = 0;
  std::vector<std::string> failures;
};

// Every triangulation of the n-gon against every arc outside it: the
// determinant, matching and mutation expansions must coincide.
SweepReport VerifyPolygon(int n);

}  // namespace snakedet

#endif  // SNAKEDET_EXPANSION_H_
