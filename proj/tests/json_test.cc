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

#include "snakedet/json_io.h"

#include <gtest/gtest.h>

#include "snakedet/error.h"
#include "snakedet/pfaffian.h"
#include "snakedet/snake.h"
#include "test_support.h"

namespace snakedet {
namespace {

using nlohmann::json;
using testing::P;

TEST(JsonTest, PolynomialTermList) {
  json j = PolynomialToJson(P("3*x1^2*x2 - x3 + 5"));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["coeff"], 3);
  EXPECT_EQ(j[0]["exponents"], json({{"x1", 2}, {"x2", 1}}));
  EXPECT_EQ(j[1]["coeff"], -1);
  EXPECT_EQ(j[2]["exponents"], json::object());
  EXPECT_EQ(PolynomialFromJson(j), P("3*x1^2*x2 - x3 + 5"));
}

TEST(JsonTest, LargeCoefficientsAreStrings) {
  Polynomial p(Integer("123456789012345678901234567890"));
  json j = PolynomialToJson(p);
  EXPECT_TRUE(j[0]["coeff"].is_string());
  EXPECT_EQ(PolynomialFromJson(j), p);
}

TEST(JsonTest, PolynomialAcceptsStringsAndIntegers) {
  EXPECT_EQ(PolynomialFromJson(json("x1 + 1")), P("x1 + 1"));
  EXPECT_EQ(PolynomialFromJson(json(-4)), Polynomial(-4));
  EXPECT_THROW(PolynomialFromJson(json(1.5)), Error);
}

TEST(JsonTest, MatrixRoundTrip) {
  PolyMatrix m = testing::ExampleMatrix();
  EXPECT_EQ(MatrixFromJson(MatrixToJson(m)), m);
  EXPECT_THROW(MatrixFromJson(json::parse("[[1, 2], [3]]")), Error);
  EXPECT_THROW(MatrixFromJson(json::parse("{\"a\": 1}")), Error);
}

TEST(JsonTest, GraphAndOrientationRoundTrip) {
  SnakeGraph s = SnakeGraph::Build("RU");
  Graph g = s.ToGraph();
  Orientation o = SnakeOrientation(s);
  Graph g2 = GraphFromJson(GraphToJson(g));
  Orientation o2 = OrientationFromJson(OrientationToJson(o));
  EXPECT_EQ(g2.n_vertices(), g.n_vertices());
  EXPECT_EQ(g2.edges(), g.edges());
  EXPECT_EQ(SkewAdjacency(g2, o2), SkewAdjacency(g, o));
}

TEST(JsonTest, OrientationRejectsMismatchedArrow) {
  EXPECT_THROW(OrientationFromJson(json::parse("{\"0-1\": [1, 2]}")), Error);
}

TEST(JsonTest, SnakeDocument) {
  SnakeGraph s = SnakeGraph::Build("RU");
  Orientation o = SnakeOrientation(s);
  json j = SnakeToJson(s, &o);
  EXPECT_EQ(j["schema"], kJsonSchema);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["n_vertices"], 8);
  EXPECT_EQ(j["n_edges"], 10);
  EXPECT_EQ(j["vertices"].size(), 8u);
  EXPECT_EQ(j["labels"]["u"].size(), 4u);
  for (const json& e : j["edges"]) EXPECT_TRUE(e.contains("arrow"));
  EXPECT_FALSE(SnakeToJson(s)["edges"][0].contains("arrow"));
}

}  // namespace
}  // namespace snakedet
