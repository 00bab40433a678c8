// Copyright 2026 The hbsiegel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "hbsiegel/io.hpp"

#include <fstream>

#include "hbsiegel/errors.hpp"

namespace hbsiegel::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidInput, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string coords_kind(const json& j) {
  if (!j.contains("coords")) return "power";
  if (!j.at("coords").is_string()) bad("'coords' must be a string");
  return j.at("coords").get<std::string>();
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

json to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

json to_json(const Interval& iv) { return json::array({to_string(iv.lo), to_string(iv.hi)}); }

json to_json(const IntervalMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

json to_json(const FieldElement& x) { return to_json(x.coords()); }

json to_json(const GSpElement& m) { return {{"matrix", to_json(m.matrix())}, {"nu", to_string(m.nu())}}; }

json to_json(const HBMatrix& h) {
  return {{"a", to_json(h.a())}, {"b", to_json(h.b())}, {"c", to_json(h.c())}, {"d", to_json(h.d())}};
}

json to_json(const HBPoint& p) {
  return {{"re", to_json(p.re())},
          {"im", to_json(p.im())},
          {"orientation", p.orientation() == Orientation::Upper ? "+" : "-"}};
}

json to_json(const SiegelPoint& p) {
  return {{"re", to_json(p.re())},
          {"im", to_json(p.im())},
          {"orientation", p.orientation() == Orientation::Upper ? "+" : "-"}};
}

json to_json(const TorsionPoint& t) { return to_json(t.coords()); }

json to_json(const HBTorsionPoint& t) { return {{"x", to_json(t.x())}, {"y", to_json(t.y())}, {"n", t.level()}}; }

json to_json(const GaussRational& z) { return json::array({to_string(z.re), to_string(z.im)}); }

json to_json(const SymTensor& t) {
  json a = json::array();
  for (const auto& [e, c] : t.terms()) a.push_back({{"exponents", e}, {"coeff", to_string(c)}, {"twist", t.twist()}});
  return a;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a string \"n/d\" or an integer");
}

RatVector vector_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty array of rows");
  std::vector<RatVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) bad("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

NumberField field_from_json(const json& j) {
  const RatVector minpoly = vector_from_json(member(j, "minpoly"));
  const json& b = member(j, "basis");
  if (!b.is_array()) bad("'basis' must be an array of coordinate vectors");
  std::vector<RatVector> basis;
  for (const auto& v : b) basis.push_back(vector_from_json(v));
  return NumberField::create(minpoly, basis);
}

FieldElement element_from_json(const NumberField& nf, const json& j, const std::string& coords) {
  const RatVector v = vector_from_json(j);
  if (v.size() != nf.degree()) bad("element has " + std::to_string(v.size()) + " coordinates, expected " +
                                   std::to_string(nf.degree()));
  if (coords == "power") return nf.element(v);
  if (coords == "order") return nf.from_basis_coords(v);
  if (coords == "dual") return nf.from_dual_coords(v);
  bad("unknown coordinate kind '" + coords + "'");
}

HBMatrix hb_matrix_from_json(const NumberField& nf, const json& j) {
  const std::string k = coords_kind(j);
  return HBMatrix(element_from_json(nf, member(j, "a"), k), element_from_json(nf, member(j, "b"), k),
                  element_from_json(nf, member(j, "c"), k), element_from_json(nf, member(j, "d"), k));
}

HBPoint hb_point_from_json(const NumberField& nf, const json& j) {
  const std::string k = coords_kind(j);
  Orientation o = Orientation::Upper;
  if (j.contains("orientation") && j.at("orientation") == "-") o = Orientation::Lower;
  return HBPoint::make(element_from_json(nf, member(j, "re"), k), element_from_json(nf, member(j, "im"), k), o);
}

SiegelPoint siegel_point_from_json(const json& j) {
  Orientation o = Orientation::Upper;
  if (j.contains("orientation") && j.at("orientation") == "-") o = Orientation::Lower;
  return SiegelPoint::make(matrix_from_json(member(j, "re")), matrix_from_json(member(j, "im")), o);
}

HBTorsionPoint hb_torsion_from_json(const NumberField& nf, const json& j) {
  const std::string k = coords_kind(j);
  const json& n = member(j, "n");
  if (!n.is_number_integer()) bad("'n' must be an integer");
  return HBTorsionPoint::make(element_from_json(nf, member(j, "x"), k), element_from_json(nf, member(j, "y"), k),
                              n.get<long>());
}

SymTensor tensor_from_json(const json& j, std::size_t genus, int degree) {
  if (!j.is_array()) bad("tensor must be an array of terms");
  int twist = 0;
  if (!j.empty()) twist = member(j.front(), "twist").get<int>();
  SymTensor t(genus, degree, twist);
  for (const auto& term : j) {
    if (member(term, "twist").get<int>() != twist) bad("mixed twists in one tensor");
    t.add_term(member(term, "exponents").get<Exponents>(), rational_from_json(member(term, "coeff")));
  }
  return t;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace hbsiegel::io
