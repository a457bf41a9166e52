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

#include <algorithm>
#include <limits>
#include <string>

#include "snakedet/error.h"

namespace snakedet {
namespace {

using nlohmann::json;

std::string PairKey(int a, int b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

VertexPair ParsePairKey(const std::string& key) {
  auto dash = key.find('-');
  try {
    if (dash == std::string::npos) throw std::invalid_argument(key);
    return MakePair(std::stoi(key.substr(0, dash)),
                    std::stoi(key.substr(dash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "bad vertex pair key \"" + key + "\"");
  }
}

json CoeffToJson(const Integer& c) {
  if (c.fits_slong_p()) return static_cast<long long>(c.get_si());
  return c.get_str();
}

Integer CoeffFromJson(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer c;
    if (c.set_str(j.get<std::string>(), 10) != 0) {
      throw Error(ErrorCode::kParse, "bad coefficient " + j.dump());
    }
    return c;
  }
  throw Error(ErrorCode::kParse, "bad coefficient " + j.dump());
}

}  // namespace

json PolynomialToJson(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.TermsInPrintOrder()) {
    json exps = json::object();
    for (const auto& [var, e] : m.factors()) exps[VarName(var)] = e;
    out.push_back({{"coeff", CoeffToJson(c)}, {"exponents", exps}});
  }
  return out;
}

Polynomial PolynomialFromJson(const json& j) {
  if (j.is_string()) return Polynomial::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Polynomial(Integer(j.get<long>()));
  if (!j.is_array()) {
    throw Error(ErrorCode::kParse, "polynomial must be a string or term list");
  }
  Polynomial out;
  for (const json& term : j) {
    if (!term.is_object() || !term.contains("coeff")) {
      throw Error(ErrorCode::kParse, "bad polynomial term " + term.dump());
    }
    std::vector<Monomial::Factor> factors;
    if (term.contains("exponents")) {
      for (const auto& [name, e] : term["exponents"].items()) {
        if (!e.is_number_unsigned()) {
          throw Error(ErrorCode::kParse, "bad exponent " + e.dump());
        }
        factors.emplace_back(Var(name), e.get<std::uint32_t>());
      }
    }
    out += Polynomial::Term(CoeffFromJson(term["coeff"]),
                            Monomial(std::move(factors)));
  }
  return out;
}

json MatrixToJson(const PolyMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).ToString());
    rows.push_back(row);
  }
  return rows;
}

PolyMatrix MatrixFromJson(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "matrix must be an array");
  std::vector<std::vector<Polynomial>> rows;
  for (const json& row : j) {
    if (!row.is_array()) {
      throw Error(ErrorCode::kParse, "matrix rows must be arrays");
    }
    std::vector<Polynomial> r;
    for (const json& entry : row) r.push_back(PolynomialFromJson(entry));
    rows.push_back(std::move(r));
  }
  return PolyMatrix::FromRows(rows);
}

Graph GraphFromJson(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw Error(ErrorCode::kParse, "graph needs \"n\" and \"edges\"");
  }
  Graph g(j["n"].get<int>());
  for (const json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(ErrorCode::kParse, "edge must be [i, j], got " + e.dump());
    }
    g.AddEdge(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("vars")) {
    for (const auto& [key, value] : j["vars"].items()) {
      VertexPair p = ParsePairKey(key);
      g.SetWeight(p.first, p.second, PolynomialFromJson(value));
    }
  }
  return g;
}

json GraphToJson(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  json vars = json::object();
  for (const auto& [a, b] : g.SupportPairs()) {
    vars[PairKey(a, b)] = g.Weight(a, b).ToString();
  }
  return {{"n", g.n_vertices()}, {"edges", edges}, {"vars", vars}};
}

Orientation OrientationFromJson(const json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kParse, "orientation must be an object");
  }
  Orientation o;
  for (const auto& [key, arrow] : j.items()) {
    VertexPair p = ParsePairKey(key);
    if (!arrow.is_array() || arrow.size() != 2) {
      throw Error(ErrorCode::kParse, "arrow must be [tail, head]");
    }
    int tail = arrow[0].get<int>(), head = arrow[1].get<int>();
    if (MakePair(tail, head) != p) {
      throw Error(ErrorCode::kParse,
                  "arrow " + arrow.dump() + " does not match pair " + key);
    }
    o.Set(tail, head);
  }
  return o;
}

json OrientationToJson(const Orientation& o) {
  json out = json::object();
  for (const auto& [p, arrow] : o.arrows()) {
    out[PairKey(p.first, p.second)] = {arrow.first, arrow.second};
  }
  return out;
}

json MatchingToJson(const PerfectMatching& m) {
  json out = json::array();
  for (const auto& [a, b] : m) out.push_back({a, b});
  return out;
}

json SnakeToJson(const SnakeGraph& s, const Orientation* o) {
  json vertices = json::array();
  for (int i = 0; i < s.n_vertices(); ++i) {
    vertices.push_back(
        {{"index", i}, {"x", s.vertices()[i].x}, {"y", s.vertices()[i].y}});
  }
  json tiles = json::array();
  for (const GridPoint& t : s.tiles()) tiles.push_back({t.x, t.y});
  json edges = json::array();
  for (const SnakeEdge& e : s.edges()) {
    json entry = {{"ends", {e.ends.first, e.ends.second}},
                  {"internal", e.internal},
                  {"weight", e.weight.ToString()}};
    if (o != nullptr) {
      auto [tail, head] = o->Arrow(e.ends.first, e.ends.second);
      entry["arrow"] = {tail, head};
    }
    edges.push_back(entry);
  }
  CanonicalLabeling lab = s.Labeling();
  return {{"schema", kJsonSchema},
          {"shape", s.shape()},
          {"d", s.tile_count()},
          {"n_vertices", s.n_vertices()},
          {"n_edges", s.edges().size()},
          {"tiles", tiles},
          {"vertices", vertices},
          {"edges", edges},
          {"labels", {{"u", lab.u}, {"w", lab.w}}}};
}

}  // namespace snakedet
