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
// Shared fixtures: the test fields and small constructors.

#ifndef HBSIEGEL_TESTS_FIELDS_HPP
#define HBSIEGEL_TESTS_FIELDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "hbsiegel/errors.hpp"
#include "hbsiegel/numfield.hpp"
#include "hbsiegel/rational.hpp"

// Expects stmt to throw hbsiegel::Error with the given code.
#define EXPECT_ERRC(stmt, errc)                                                 \
  do {                                                                          \
    try {                                                                       \
      (void)(stmt);                                                             \
      ADD_FAILURE() << #stmt " did not throw";                                  \
    } catch (const ::hbsiegel::Error& e_) {                                     \
      EXPECT_EQ(::hbsiegel::errc_name(e_.code()), ::hbsiegel::errc_name(errc)); \
    }                                                                           \
  } while (0)

namespace hbsiegel::testing {

inline Rational q(const char* s) { return parse_rational(s); }

inline RatVector rv(std::initializer_list<const char*> xs) {
  RatVector v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline RatMatrix rm(std::initializer_list<std::initializer_list<const char*>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const char* x : row) m(r, c++) = parse_rational(x);
    ++r;
  }
  return m;
}

// Field with the power basis 1, theta, ..., theta^(g-1) as order basis.
inline NumberField power_basis_field(const RatVector& minpoly) {
  const std::size_t g = minpoly.size() - 1;
  std::vector<RatVector> basis(g, RatVector(g, Rational(0)));
  for (std::size_t i = 0; i < g; ++i) basis[i][i] = 1;
  return NumberField::create(minpoly, basis);
}

inline NumberField golden() { return power_basis_field(rv({"-1", "-1", "1"})); }
inline NumberField sqrt2() { return power_basis_field(rv({"-2", "0", "1"})); }
inline NumberField cubic49() { return power_basis_field(rv({"1", "-2", "-1", "1"})); }
inline NumberField cubic81() { return power_basis_field(rv({"-1", "-3", "0", "1"})); }
inline NumberField rationals() { return power_basis_field(rv({"0", "1"})); }

inline std::vector<std::pair<std::string, NumberField>> test_fields() {
  return {{"golden", golden()}, {"sqrt2", sqrt2()}, {"cubic49", cubic49()}, {"cubic81", cubic81()}};
}

inline std::vector<std::pair<std::string, NumberField>> test_fields_with_q() {
  auto v = test_fields();
  v.emplace_back("rationals", rationals());
  return v;
}

}  // namespace hbsiegel::testing

#endif  // HBSIEGEL_TESTS_FIELDS_HPP
