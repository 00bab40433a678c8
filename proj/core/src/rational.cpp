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
#include "hbsiegel/rational.hpp"

#include <cctype>

#include "hbsiegel/errors.hpp"

namespace hbsiegel {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::RepeatedRoots: return "RepeatedRoots";
    case Errc::NotTotallyReal: return "NotTotallyReal";
    case Errc::NotAnOrder: return "NotAnOrder";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NonSquare: return "NonSquare";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::LevelTooSmall: return "LevelTooSmall";
    case Errc::NotInGPrime: return "NotInGPrime";
    case Errc::NotUpperHalf: return "NotUpperHalf";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::WrongLength: return "WrongLength";
    case Errc::NotInLatticeGroup: return "NotInLatticeGroup";
    case Errc::InvalidTorsion: return "InvalidTorsion";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw Error(Errc::InvalidInput, "malformed rational '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(Errc::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integral(const RatVector& v) {
  for (const auto& q : v)
    if (!is_integer(q)) return false;
  return true;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

RatVector frac(const RatVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(frac(q));
  return out;
}

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace hbsiegel
