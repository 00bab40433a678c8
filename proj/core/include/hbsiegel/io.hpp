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
#ifndef HBSIEGEL_IO_HPP
#define HBSIEGEL_IO_HPP

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "hbsiegel/interval.hpp"
#include "hbsiegel/modembed.hpp"
#include "hbsiegel/numfield.hpp"
#include "hbsiegel/symplectic.hpp"
#include "hbsiegel/symrep.hpp"
#include "hbsiegel/torsion.hpp"

// JSON forms. Every rational is a string "n" or "n/d" (reduced, d > 0).
//
//   field:        {"minpoly": [c0, ..., 1], "basis": [[...], ...]}
//   element:      [c0, ..., c_{g-1}]            power-basis coordinates
//   HB matrix:    {"a": elt, "b": elt, "c": elt, "d": elt, "coords": kind}
//   HB point:     {"re": elt, "im": elt, "coords": kind}
//   HB torsion:   {"x": elt, "y": elt, "n": int, "coords": kind}
//   matrix:       [[row 0], [row 1], ...]
//   Siegel point: {"re": matrix, "im": matrix}
//   tensor:       [{"exponents": [ints], "coeff": q, "twist": int}, ...]
//
// "coords" is optional: "power" (default), "order" (coordinates in e) or
// "dual" (coordinates in e*).

namespace hbsiegel::io {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const RatVector& v);
json to_json(const RatMatrix& m);
json to_json(const Interval& iv);
json to_json(const IntervalMatrix& m);
json to_json(const FieldElement& x);
json to_json(const GSpElement& m);
json to_json(const HBMatrix& h);
json to_json(const HBPoint& p);
json to_json(const SiegelPoint& p);
json to_json(const TorsionPoint& t);
json to_json(const HBTorsionPoint& t);
json to_json(const GaussRational& z);
json to_json(const SymTensor& t);

/// Parsing functions throw Error(InvalidInput) on malformed data.
Rational rational_from_json(const json& j);
RatVector vector_from_json(const json& j);
RatMatrix matrix_from_json(const json& j);
NumberField field_from_json(const json& j);
FieldElement element_from_json(const NumberField& nf, const json& j, const std::string& coords = "power");
HBMatrix hb_matrix_from_json(const NumberField& nf, const json& j);
HBPoint hb_point_from_json(const NumberField& nf, const json& j);
SiegelPoint siegel_point_from_json(const json& j);
HBTorsionPoint hb_torsion_from_json(const NumberField& nf, const json& j);
SymTensor tensor_from_json(const json& j, std::size_t genus, int degree);

/// Reads and parses a JSON file (InvalidInput when unreadable).
json read_json_file(const std::filesystem::path& path);

}  // namespace hbsiegel::io

#endif  // HBSIEGEL_IO_HPP
