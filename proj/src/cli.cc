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

#include "snakedet/cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include "snakedet/cluster.h"
#include "snakedet/error.h"
#include "snakedet/expansion.h"
#include "snakedet/json_io.h"
#include "snakedet/linalg.h"
#include "snakedet/matching.h"
#include "snakedet/pfaffian.h"
#include "snakedet/polygon.h"
#include "snakedet/snake.h"

namespace snakedet {
namespace {

using nlohmann::json;

json ReadJsonInput(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

int MaxTilesFromEnv() {
  const char* env = std::getenv("SNAKE_EXPAND_MAX_D");
  if (env == nullptr || *env == '\0') return kDefaultMaxTiles;
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 1 &&
        v < kMaxDeterminantSize) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string("SNAKE_EXPAND_MAX_D must be an integer in [1, ") +
                  std::to_string(kMaxDeterminantSize - 1) + "], got \"" + env +
                  "\"");
}

std::string SignText(int s) { return s > 0 ? "+1" : "-1"; }

struct Options {
  bool json = false;
  std::string shape;
  std::string snake_action;
  std::string input;
  std::string graph_path;
  bool list = false;
  bool check = false;
  int n = 0;
  std::string diagonals;
  std::string arc;
  std::string method = "all";
  int max_d = 8;
};

void RunSnake(const Options& opt, std::ostream& out) {
  SnakeGraph s = SnakeGraph::Build(opt.shape);
  if (opt.snake_action == "build") {
    out << SnakeToJson(s).dump(2) << "\n";
  } else if (opt.snake_action == "orient") {
    Orientation o = SnakeOrientation(s);
    json j = SnakeToJson(s, &o);
    j["pfaffian_orientation"] =
        s.n_vertices() <= kMaxCycleSearchVertices
            ? json(IsPfaffianOrientation(s.ToGraph(), o, true))
            : json(IsPfaffianOrientation(s.ToGraph(), o, false));
    out << j.dump(2) << "\n";
  } else if (opt.snake_action == "matrix") {
    BiadjMatrix m = SnakeBiadjacency(s);
    json j = {{"schema", kJsonSchema},
              {"shape", s.shape()},
              {"d", s.tile_count()},
              {"rows", m.rows},
              {"cols", m.cols},
              {"matrix", MatrixToJson(m.entries)},
              {"det", Determinant(m.entries).ToString()}};
    out << j.dump(2) << "\n";
  } else {
    SignMeasurement m = MeasureSign(s);
    json j = {{"schema", kJsonSchema},
              {"shape", s.shape()},
              {"d", s.tile_count()},
              {"sign_measured", m.epsilon},
              {"sign_corollary", m.corollary_sign},
              {"matches_corollary", m.matches_corollary}};
    out << j.dump(2) << "\n";
  }
}

void RunMatchings(const Options& opt, std::ostream& out) {
  Graph g = opt.graph_path.empty()
                ? SnakeGraph::Build(opt.shape).ToGraph()
                : GraphFromJson(ReadJsonInput(opt.graph_path));
  auto matchings = EnumerateMatchings(g);
  Integer count = CountMatchings(g);
  if (opt.json || opt.list) {
    json j = {{"schema", kJsonSchema},
              {"count", count.fits_slong_p() ? json(count.get_si())
                                             : json(count.get_str())},
              {"phi", MatchingPolynomial(g).ToString()}};
    if (opt.list) {
      json list = json::array();
      for (const auto& m : matchings) list.push_back(MatchingToJson(m));
      j["matchings"] = list;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "perfect matchings: " << count.get_str() << "\n";
  }
}

void RunPfaffian(const Options& opt, std::ostream& out) {
  json result = {{"schema", kJsonSchema}};
  Polynomial pff;
  if (!opt.input.empty()) {
    json doc = ReadJsonInput(opt.input);
    if (doc.is_array() || doc.contains("matrix")) {
      PolyMatrix m = MatrixFromJson(doc.is_array() ? doc : doc["matrix"]);
      pff = Pfaffian(m);
      if (opt.check) result["cayley"] = CheckCayley(m);
    } else {
      if (!doc.contains("graph") || !doc.contains("orientation")) {
        throw Error(ErrorCode::kParse,
                    "expected {\"matrix\": ...} or {\"graph\": ..., "
                    "\"orientation\": ...}");
      }
      Graph g = GraphFromJson(doc["graph"]);
      Orientation o = OrientationFromJson(doc["orientation"]);
      pff = Pfaffian(SkewAdjacency(g, o));
      if (opt.check) {
        auto report = CheckPfaffianOrientation(
            g, o, g.n_vertices() <= kMaxCycleSearchVertices);
        result["pfaffian_orientation"] = report.by_count;
        result["matching_count"] = report.matching_count.get_str();
      }
    }
  } else {
    SnakeGraph s = SnakeGraph::Build(opt.shape);
    CanonicalLabeling lab = s.Labeling();
    std::vector<int> order = lab.u;
    order.insert(order.end(), lab.w.begin(), lab.w.end());
    pff = Pfaffian(SkewAdjacency(s.ToGraph(), SnakeOrientation(s), order));
    result["order"] = order;
    if (opt.check) {
      result["pfaffian_orientation"] =
          IsPfaffianOrientation(s.ToGraph(), SnakeOrientation(s),
                                s.n_vertices() <= kMaxCycleSearchVertices);
    }
  }
  result["pfaffian"] = pff.ToString();
  if (opt.json) {
    out << result.dump(2) << "\n";
    return;
  }
  out << pff.ToString() << "\n";
  for (const char* key : {"cayley", "pfaffian_orientation"}) {
    if (result.contains(key)) {
      out << key << ": " << (result[key].get<bool>() ? "yes" : "no") << "\n";
    }
  }
}

void RunDet(const Options& opt, std::ostream& out) {
  json doc = ReadJsonInput(opt.input);
  PolyMatrix m = MatrixFromJson(doc.is_array() ? doc : doc.at("matrix"));
  Polynomial det = Determinant(m);
  if (opt.json) {
    out << json({{"schema", kJsonSchema},
                 {"det", det.ToString()},
                 {"terms", PolynomialToJson(det)}})
               .dump(2)
        << "\n";
  } else {
    out << det.ToString() << "\n";
  }
}

int RunExpand(const Options& opt, std::ostream& out, std::ostream& err) {
  PolygonTriangulation t = PolygonTriangulation::Parse(opt.n, opt.diagonals);
  Diagonal arc = ParseArc(opt.n, opt.arc);
  const int max_tiles = MaxTilesFromEnv();
  json j = {{"schema", kJsonSchema},
            {"n", opt.n},
            {"diagonals", t.ToString()},
            {"arc", opt.arc},
            {"method", opt.method}};
  json results = json::object();
  std::vector<std::pair<std::string, LaurentExpr>> values;
  if (opt.method == "det" || opt.method == "all") {
    DetExpansion e = ExpandDetDetailed(t, arc, max_tiles);
    values.emplace_back("det", e.value);
    j["d"] = e.tiles;
    j["shape"] = e.shape;
    j["sign_measured"] = e.sign_measured;
    j["sign_corollary"] = e.sign_corollary;
  }
  if (opt.method == "matchings" || opt.method == "all") {
    values.emplace_back("matchings", ExpandMatchings(t, arc));
  }
  if (opt.method == "mutation" || opt.method == "all") {
    values.emplace_back("mutation", ExpandMutationOracle(t, arc));
  }
  if (!j.contains("d") && !t.Contains(MakePair(arc.first, arc.second))) {
    WeightedSnake ws = MswSnake(t, arc);
    j["d"] = ws.snake.tile_count();
    j["shape"] = ws.snake.shape();
  }
  bool agree = true;
  for (const auto& [name, v] : values) {
    results[name] = v.ToString();
    agree = agree && v == values.front().second;
  }
  j["results"] = results;
  j["numerator"] = values.front().second.numerator().ToString();
  j["denominator"] = values.front().second.denominator().ToString();
  j["agree"] = agree;
  if (opt.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [name, v] : values) {
      out << name << ": " << v.ToString() << "\n";
    }
  }
  if (!agree) {
    err << json({{"error", "Disagreement"},
                 {"message", "expansion methods disagree"}})
               .dump()
        << "\n";
    return 1;
  }
  return 0;
}

int RunVerify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n < 4 || opt.n > kMaxOraclePolygon) {
    throw Error(ErrorCode::kInvalidArgument,
                "verify needs 4 <= n <= " + std::to_string(kMaxOraclePolygon));
  }
  SweepReport r = VerifyPolygon(opt.n);
  int arcs_per = r.triangulations ? r.pairs / r.triangulations : 0;
  if (opt.json) {
    out << json({{"schema", kJsonSchema},
                 {"n", r.n},
                 {"triangulations", r.triangulations},
                 {"arcs_per_triangulation", arcs_per},
                 {"pairs", r.pairs},
                 {"agreements", r.agreements},
                 {"failures", r.failures}})
               .dump(2)
        << "\n";
  } else if (r.failures.empty()) {
    out << "all (triangulation, arc) pairs agree: " << r.triangulations
        << " triangulations × " << arcs_per << " arcs (" << r.pairs
        << " pairs)\n";
  } else {
    out << r.failures.size() << " of " << r.pairs << " pairs disagree\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
  if (!r.failures.empty()) {
    err << json({{"error", "Disagreement"},
                 {"message", std::to_string(r.failures.size()) +
                                 " pairs disagree"}})
               .dump()
        << "\n";
    return 1;
  }
  return 0;
}

void RunSignReport(const Options& opt, std::ostream& out) {
  if (opt.max_d < 1 || opt.max_d > 16) {
    throw Error(ErrorCode::kInvalidArgument, "--max-d must be in [1, 16]");
  }
  json rows = json::array();
  std::ostringstream table;
  table << "d  shapes  epsilon  corollary  agree\n";
  for (int d = 1; d <= opt.max_d; ++d) {
    std::set<int> eps;
    auto shapes = AllShapes(d);
    for (const auto& shape : shapes) {
      eps.insert(MeasureSign(SnakeGraph::Build(shape)).epsilon);
    }
    int corollary = CorollarySign(d);
    bool uniform = eps.size() == 1;
    int e = *eps.begin();
    bool agrees = uniform && e == corollary;
    rows.push_back({{"d", d},
                    {"shapes", shapes.size()},
                    {"epsilon", uniform ? json(e) : json("mixed")},
                    {"corollary", corollary},
                    {"agrees", agrees}});
    table << d << "  " << shapes.size() << "  "
          << (uniform ? SignText(e) : std::string("mixed")) << "  "
          << SignText(corollary) << "  " << (agrees ? "yes" : "no") << "\n";
  }
  if (opt.json) {
    out << json({{"schema", kJsonSchema}, {"rows", rows}}).dump(2) << "\n";
  } else {
    out << table.str();
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Cluster expansions of polygon arcs via snake-graph "
               "determinants"};
  app.require_subcommand(1);
  Options opt;

  auto* snake = app.add_subcommand("snake", "Build and inspect snake graphs");
  snake->add_option("action", opt.snake_action, "build | matrix | orient | sign")
      ->required()
      ->check(CLI::IsMember({"build", "matrix", "orient", "sign"}));
  snake->add_option("--shape", opt.shape, "Shape word over {R,U}")->required();
  snake->add_flag("--json", opt.json, "Machine output (always JSON here)");

  auto* matchings = app.add_subcommand("matchings", "Count perfect matchings");
  auto* m_shape = matchings->add_option("--shape", opt.shape, "Snake shape");
  auto* m_graph =
      matchings->add_option("--input,--graph", opt.graph_path,
                            "Graph JSON file or -");
  m_shape->excludes(m_graph);
  matchings->add_flag("--list", opt.list, "List every matching as JSON");
  matchings->add_flag("--json", opt.json, "Machine output");

  auto* pfaffian = app.add_subcommand("pfaffian", "Pfaffian by partition sum");
  auto* p_input = pfaffian->add_option(
      "--input", opt.input,
      "JSON file or -: {\"matrix\": ...} or {\"graph\": ..., "
      "\"orientation\": ...}");
  auto* p_shape = pfaffian->add_option(
      "--shape", opt.shape, "Snake shape, oriented and ordered u then w");
  p_input->excludes(p_shape);
  pfaffian->add_flag("--check", opt.check,
                     "Also check Cayley's identity or the orientation");
  pfaffian->add_flag("--json", opt.json, "Machine output");

  auto* det = app.add_subcommand("det", "Determinant of a polynomial matrix");
  det->add_option("--input", opt.input, "JSON matrix of polynomial strings")
      ->required();
  det->add_flag("--json", opt.json, "Machine output");

  auto* expand = app.add_subcommand("expand", "Expand the cluster variable of an arc");
  expand->add_option("--n", opt.n, "Polygon vertex count")->required();
  expand->add_option("--diagonals", opt.diagonals, "e.g. 0-2,0-3,0-4")
      ->required();
  expand->add_option("--arc", opt.arc, "e.g. 1-4")->required();
  expand->add_option("--method", opt.method, "det | matchings | mutation | all")
      ->check(CLI::IsMember({"det", "matchings", "mutation", "all"}));
  expand->add_flag("--json", opt.json, "Machine output");

  auto* verify = app.add_subcommand(
      "verify", "Three-way agreement over every triangulation and arc");
  verify->add_option("--n", opt.n, "Polygon vertex count")->required();
  verify->add_flag("--json", opt.json, "Machine output");

  auto* sign_report = app.add_subcommand(
      "sign-report", "Measured det/phi sign per tile count");
  sign_report->add_option("--max-d", opt.max_d, "Largest tile count (default 8)");
  sign_report->add_flag("--json", opt.json, "Machine output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const CLI::App* failing = &app;
    for (const CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return 2;
  }

  try {
    if (snake->parsed()) {
      RunSnake(opt, out);
    } else if (matchings->parsed()) {
      if (m_shape->count() == 0 && m_graph->count() == 0) {
        err << "usage error: matchings needs --shape or --graph\n"
            << matchings->help();
        return 2;
      }
      RunMatchings(opt, out);
    } else if (pfaffian->parsed()) {
      if (p_shape->count() == 0 && p_input->count() == 0) {
        err << "usage error: pfaffian needs --input or --shape\n"
            << pfaffian->help();
        return 2;
      }
      RunPfaffian(opt, out);
    } else if (det->parsed()) {
      RunDet(opt, out);
    } else if (expand->parsed()) {
      return RunExpand(opt, out, err);
    } else if (verify->parsed()) {
      return RunVerify(opt, out, err);
    } else if (sign_report->parsed()) {
      RunSignReport(opt, out);
    }
  } catch (const Error& e) {
    err << json({{"error", std::string(ErrorCodeName(e.code()))},
                 {"message", e.what()}})
               .dump()
        << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << json({{"error", std::string(ErrorCodeName(ErrorCode::kParse))},
                 {"message", e.what()}})
               .dump()
        << "\n";
    return 1;
  }
  return 0;
}

}  // namespace snakedet
