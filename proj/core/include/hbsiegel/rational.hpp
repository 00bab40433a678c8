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
#ifndef HBSIEGEL_RATIONAL_HPP
#define HBSIEGEL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hbsiegel {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Canonical text form: "n" for integers, "n/d" otherwise, d > 0, reduced.
std::string to_string(const Rational& q);

/// Accepts "n", "n/d", optional leading sign; rejects d = 0 and junk.
Rational parse_rational(std::string_view text);

/// n/d in lowest terms; d must be nonzero.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const RatVector& v);

Integer floor(const Rational& q);

/// Representative of q modulo Z in [0, 1).
Rational frac(const Rational& q);

RatVector frac(const RatVector& v);

Integer lcm_of_denominators(const RatVector& v);

}  // namespace hbsiegel

#endif  // HBSIEGEL_RATIONAL_HPP
