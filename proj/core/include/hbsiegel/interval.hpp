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
#ifndef HBSIEGEL_INTERVAL_HPP
#define HBSIEGEL_INTERVAL_HPP

#include <algorithm>

#include "hbsiegel/matrix.hpp"
#include "hbsiegel/rational.hpp"

namespace hbsiegel {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(int v) : lo(v), hi(v) {}  // NOLINT: point interval
  Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }

  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  Interval& operator-=(const Interval& o) {
    Rational l = lo - o.hi;
    hi -= o.lo;
    lo = std::move(l);
    return *this;
  }
  Interval& operator*=(const Interval& o) {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    lo = std::min({a, b, c, d});
    hi = std::max({a, b, c, d});
    return *this;
  }

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  // Identity of endpoints, not set inclusion.
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

using IntervalMatrix = Matrix<Interval>;

inline IntervalMatrix to_interval(const RatMatrix& m) {
  IntervalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Interval(m(r, c));
  return out;
}

/// Entrywise containment of an exact matrix in an interval matrix.
inline bool encloses(const IntervalMatrix& box, const RatMatrix& m) {
  if (box.rows() != m.rows() || box.cols() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!box(r, c).contains(m(r, c))) return false;
  return true;
}

inline Rational max_width(const IntervalMatrix& box) {
  Rational w = 0;
  for (const auto& iv : box.data()) w = std::max(w, iv.width());
  return w;
}

}  // namespace hbsiegel

#endif  // HBSIEGEL_INTERVAL_HPP
