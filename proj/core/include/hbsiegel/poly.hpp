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
#ifndef HBSIEGEL_POLY_HPP
#define HBSIEGEL_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hbsiegel/interval.hpp"
#include "hbsiegel/rational.hpp"

namespace hbsiegel {

/// Univariate polynomial over Q, coefficients in ascending degree order.
/// The zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(RatVector coeffs);

  static RatPoly monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const RatVector& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& x) const;
  Interval eval(const Interval& x) const;
  int sign_at(const Rational& x) const;

  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& s);
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

 private:
  void trim();

  RatVector coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);

/// Sturm chain p, p', -rem(p, p'), ...
class SturmSequence {
 public:
  explicit SturmSequence(const RatPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

  /// Distinct real roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
  }
  int count_real_roots() const {
    return variations_at_minus_infinity() - variations_at_plus_infinity();
  }

  const RatPoly& poly() const { return chain_.front(); }

 private:
  std::vector<RatPoly> chain_;
};

/// Strict bound B with every real root in (-B, B); a power of two.
Rational root_bound(const RatPoly& p);

/// Disjoint isolating intervals for all real roots of a squarefree p, in
/// ascending order. Endpoints are dyadic and never roots unless the interval
/// is a single point (an exact rational root).
std::vector<Interval> isolate_real_roots(const RatPoly& p);

/// Bisect an isolating interval of the simple root until width <= 2^-bits.
Interval refine_root(const RatPoly& p, Interval iv, unsigned bits);

}  // namespace hbsiegel

#endif  // HBSIEGEL_POLY_HPP
