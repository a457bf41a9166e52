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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Comparisons are exact; time limits are pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "snakedet/cluster.h"
#include "snakedet/error.h"
#include "snakedet/expansion.h"
#include "snakedet/linalg.h"
#include "snakedet/matching.h"
#include "snakedet/pfaffian.h"
#include "snakedet/polygon.h"
#include "snakedet/snake.h"
#include "test_support.h"

namespace snakedet {
namespace {

// Seconds allowed per criterion.
constexpr double kLimitGolden = 1.0;
constexpr double kLimitBaseCase = 1.0;
constexpr double kLimitSweep = 300.0;
constexpr double kLimitOrientation = 120.0;
constexpr double kLimitIdentities = 120.0;
constexpr double kLimitSignReport = 60.0;
constexpr double kLimitStructure = 10.0;
constexpr double kLimitMutation = 60.0;

constexpr int kRandomOrientationsPerShape = 50;
constexpr int kIdentityTrials = 100;
constexpr int kInvolutionSeeds = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

#define CHECK_OR_RETURN(cond, msg)            \
  do {                                        \
    if (!(cond)) {                            \
      std::ostringstream os_;                 \
      os_ << msg;                             \
      return Outcome{false, os_.str()};       \
    }                                         \
  } while (0)

Outcome GoldenDeterminant() {
  Polynomial det = Determinant(testing::ExampleMatrix());
  CHECK_OR_RETURN(det == testing::ExampleDeterminant(),
                  "det(M) = " << det.ToString());
  return {true, "det(M) = " + det.ToString()};
}

Outcome BaseCasePfaffian() {
  SnakeGraph s = SnakeGraph::Build("");
  CanonicalLabeling lab = s.Labeling();
  auto z = [&](int i, int j) { return s.Weight(MakePair(lab.u[i], lab.w[j])); };
  std::vector<int> order{lab.u[0], lab.u[1], lab.w[0], lab.w[1]};
  Polynomial pff =
      Pfaffian(SkewAdjacency(s.ToGraph(), SnakeOrientation(s), order));
  Polynomial expected = -(z(0, 0) * z(1, 1)) - z(1, 0) * z(0, 1);
  CHECK_OR_RETURN(pff == expected, "pff = " << pff.ToString());
  Integer at_one = abs(EvalOnes(pff));
  Integer phi = CountMatchings(s.ToGraph());
  CHECK_OR_RETURN(at_one == 2 && phi == 2,
                  "|pff(1)| = " << at_one << ", Phi = " << phi);
  return {true, "pff = " + pff.ToString() + ", |pff(1)| = Phi = 2"};
}

Outcome ThreeWaySweep() {
  std::ostringstream summary;
  int total = 0;
  for (int n = 5; n <= 8; ++n) {
    SweepReport r = VerifyPolygon(n);
    CHECK_OR_RETURN(r.failures.empty(),
                    "n=" << n << ": " << r.failures.size()
                         << " disagreements, first: " << r.failures.front());
    CHECK_OR_RETURN(r.agreements == r.pairs && r.pairs > 0,
                    "n=" << n << ": " << r.agreements << "/" << r.pairs);
    summary << "n=" << n << ": " << r.triangulations << " T, " << r.pairs
            << " pairs; ";
    total += r.pairs;
  }
  summary << "total " << total << " pairs agree";
  return {true, summary.str()};
}

Outcome OrientationSuite() {
  std::mt19937 rng(20260101);
  int shapes = 0, cycles = 0;
  for (int d = 1; d <= 6; ++d) {
    for (const std::string& shape : AllShapes(d)) {
      ++shapes;
      SnakeGraph s = SnakeGraph::Build(shape);
      Graph g = s.ToGraph().WithUnitWeights();
      Orientation p = SnakeOrientation(s);
      PfaffianOrientationReport r = CheckPfaffianOrientation(g, p, true);
      CHECK_OR_RETURN(r.by_count, shape << ": |pff(B(1))| = "
                                        << abs(r.pfaffian_at_one)
                                        << " but Phi = " << r.matching_count);
      CHECK_OR_RETURN(r.by_cycles.value_or(false),
                      shape << ": an even nice cycle is evenly oriented");
      for (const auto& c : EvenNiceCycles(g)) {
        CHECK_OR_RETURN(AgreementCount(c, p) % 2 == 1,
                        shape << ": even agreement on a nice cycle");
        ++cycles;
      }
      for (int k = 0; k < kRandomOrientationsPerShape; ++k) {
        Orientation o = testing::RandomOrientation(rng, g);
        Integer pff1 = EvalOnes(Pfaffian(SkewAdjacency(g, o)));
        CHECK_OR_RETURN(abs(pff1) <= r.matching_count,
                        shape << ": random orientation gives |pff(1)| = "
                              << abs(pff1) << " > " << r.matching_count);
      }
    }
  }
  return {true, std::to_string(shapes) + " shapes, " + std::to_string(cycles) +
                    " even nice cycles, " +
                    std::to_string(shapes * kRandomOrientationsPerShape) +
                    " random orientations"};
}

Outcome IdentitySuite() {
  std::mt19937 rng(20260102);
  for (int t = 0; t < kIdentityTrials; ++t) {
    int n = 2 * (1 + t % 4);  // 2, 4, 6, 8
    PolyMatrix b = testing::RandomSkew(rng, n);
    Polynomial pff = Pfaffian(b);
    CHECK_OR_RETURN(Determinant(b) == pff * pff,
                    "Cayley fails for a " << n << "x" << n << " matrix");
  }
  for (int t = 0; t < kIdentityTrials; ++t) {
    int n = 1 + t % 6;  // blocks 1x1 .. 6x6
    PolyMatrix m = testing::RandomMatrix(rng, n);
    BlockPfaffian r = BlockPfaffianSign(m);
    int sign = (n * (n - 1) / 2) % 2 ? -1 : 1;
    CHECK_OR_RETURN(r.sign == sign && r.pfaffian == r.determinant * sign,
                    "block identity fails for n=" << n);
    CHECK_OR_RETURN(r.determinant == testing::CofactorDet(m),
                    "determinant disagrees with cofactor expansion, n=" << n);
  }
  return {true, std::to_string(kIdentityTrials) + " skew (2..8) + " +
                    std::to_string(kIdentityTrials) + " block (1..6) matrices"};
}

Outcome SignReport() {
  std::printf("      d  shapes  epsilon  (-1)^((d+1)(d+2)/2)  agree\n");
  bool d3_ok = false;
  for (int d = 1; d <= 8; ++d) {
    std::set<int> eps;
    auto shapes = AllShapes(d);
    for (const std::string& shape : shapes) {
      SnakeGraph s = SnakeGraph::Build(shape);
      Polynomial det = Determinant(SnakeBiadjacency(s).entries);
      int sign = 0;
      for (const auto& [m, c] : det.terms()) {
        int sc = sgn(c);
        CHECK_OR_RETURN(sign == 0 || sc == sign,
                        shape << ": det has mixed coefficient signs");
        sign = sc;
      }
      SignMeasurement m = MeasureSign(s);  // throws if det != +-phi
      CHECK_OR_RETURN(m.epsilon == sign, shape << ": epsilon mismatch");
      eps.insert(m.epsilon);
    }
    int cor = CorollarySign(d);
    bool uniform = eps.size() == 1;
    bool agree = uniform && *eps.begin() == cor;
    std::printf("      %d  %6zu  %7s  %19s  %s%s\n", d, shapes.size(),
                uniform ? (*eps.begin() > 0 ? "+1" : "-1") : "mixed",
                cor > 0 ? "+1" : "-1", agree ? "yes" : "no",
                d == 1 ? "  (reported only)" : "");
    if (d == 3) d3_ok = agree;
  }
  CHECK_OR_RETURN(d3_ok, "d=3 row disagrees");
  return {true, "every snake coherent; d=3 agrees"};
}

Outcome StructuralCounts() {
  int snakes = 0;
  for (int d = 1; d <= 10; ++d) {
    for (const std::string& shape : AllShapes(d)) {
      SnakeGraph s = SnakeGraph::Build(shape);
      CHECK_OR_RETURN(s.n_vertices() == 2 * d + 2 &&
                          static_cast<int>(s.edges().size()) == 3 * d + 1,
                      shape << ": |V| = " << s.n_vertices()
                            << ", |E| = " << s.edges().size());
      ++snakes;
    }
  }
  for (int n = 4; n <= 8; ++n) {
    for (const auto& t : AllTriangulations(n)) {
      for (const Diagonal& arc : AllDiagonals(n)) {
        if (t.Contains(arc)) continue;
        SnakeGraph s = MswSnake(t, arc).snake;
        int d = s.tile_count();
        CHECK_OR_RETURN(s.n_vertices() == 2 * d + 2 &&
                            static_cast<int>(s.edges().size()) == 3 * d + 1,
                        t.ToString() << " arc " << arc.first << "-"
                                     << arc.second << ": bad counts");
        ++snakes;
      }
    }
  }
  int hexagon = static_cast<int>(AllTriangulations(6).size());
  CHECK_OR_RETURN(hexagon == 14, "hexagon has " << hexagon << " triangulations");
  return {true, std::to_string(snakes) +
                    " snakes checked; hexagon flip graph has 14 triangulations"};
}

Outcome MutationAlgebra() {
  std::mt19937 rng(20260103);
  std::vector<std::vector<PolygonTriangulation>> pool;
  for (int n = 4; n <= 8; ++n) pool.push_back(AllTriangulations(n));
  std::uniform_int_distribution<int> pick_n(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> steps(0, 4);
  for (int i = 0; i < kInvolutionSeeds; ++i) {
    const auto& ts = pool[pick_n(rng)];
    std::uniform_int_distribution<std::size_t> pick_t(0, ts.size() - 1);
    Seed seed = InitialSeed(ts[pick_t(rng)]);
    std::uniform_int_distribution<int> pick_k(0, seed.triangulation.size() - 1);
    for (int s = steps(rng); s > 0; --s) seed = Mutate(seed, pick_k(rng));
    int k = pick_k(rng);
    Seed back = Mutate(Mutate(seed, k), k);
    CHECK_OR_RETURN(back.b_matrix == seed.b_matrix &&
                        back.triangulation.Key() == seed.triangulation.Key(),
                    "seed " << i << ": mu_k mu_k changes B or T");
    for (std::size_t j = 0; j < seed.cluster.size(); ++j) {
      CHECK_OR_RETURN(back.cluster[j] == seed.cluster[j],
                      "seed " << i << ": mu_k mu_k changes x" << j + 1);
    }
  }
  int checked = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const auto& t : AllTriangulations(n)) {
      for (int k = 0; k < t.size(); ++k) {
        CHECK_OR_RETURN(BMatrix(t.Flip(k)) == MutateMatrix(BMatrix(t), k),
                        t.ToString() << " slot " << k);
        ++checked;
      }
    }
  }
  return {true, std::to_string(kInvolutionSeeds) + " involutions, " +
                    std::to_string(checked) + " flip/matrix pairs"};
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace snakedet

int main() {
  using namespace snakedet;
  const Criterion criteria[] = {
      {1, "worked example determinant", kLimitGolden, GoldenDeterminant},
      {2, "single-tile pfaffian", kLimitBaseCase, BaseCasePfaffian},
      {3, "three-way expansion sweep n=5..8", kLimitSweep, ThreeWaySweep},
      {4, "pfaffian orientation suite d<=6", kLimitOrientation,
       OrientationSuite},
      {5, "Cayley and block pfaffian identities", kLimitIdentities,
       IdentitySuite},
      {6, "sign report d=1..8", kLimitSignReport, SignReport},
      {7, "structural counts", kLimitStructure, StructuralCounts},
      {8, "mutation algebra", kLimitMutation, MutationAlgebra},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const Error& e) {
      out = {false, std::string(ErrorCodeName(e.code())) + ": " + e.what()};
    } catch (const std::exception& e) {
      out = {false, e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (out.ok && secs > c.limit) {
      out = {false, "took " + std::to_string(secs) + " s"};
    }
    failed += !out.ok;
    std::printf("[%s] %d %s (%.3f s, limit %.0f s): %s\n",
                out.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed ? 1 : 0;
}
