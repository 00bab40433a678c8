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
#ifndef HBSIEGEL_NUMFIELD_HPP
#define HBSIEGEL_NUMFIELD_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "hbsiegel/interval.hpp"
#include "hbsiegel/matrix.hpp"
#include "hbsiegel/poly.hpp"
#include "hbsiegel/rational.hpp"

namespace hbsiegel {

class FieldElement;

/// Isolating intervals for the real roots of the defining polynomial,
/// ascending. Interval i encloses sigma_i(theta).
struct RealEmbeddingSet {
  std::vector<Interval> intervals;
  unsigned precision = 0;  // every width is <= 2^-precision
};

namespace detail {
struct FieldData;
}

// A totally real field F = Q[x]/(f) together with a Z-basis e_1..e_g of an
// order O. Elements are stored in the power basis of the root theta of f;
// coordinates with respect to e and to the trace-dual basis e* (a Z-basis of
// the inverse different) are derived through the trace pairing.
//
// NumberField is a cheap shared handle to immutable data. Two handles are
// the same field iff they were copied from the same create() call.
class NumberField {
 public:
  /// Validates squarefreeness, total realness, and that the basis spans an
  /// order. Throws Error with RepeatedRoots, NotTotallyReal, SingularBasis,
  /// NotAnOrder or InvalidInput.
  static NumberField create(const RatVector& minpoly, const std::vector<RatVector>& basis);

  std::size_t degree() const;
  const RatPoly& minpoly() const;

  FieldElement element(RatVector power_coords) const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement theta() const;

  /// The order basis e_1..e_g.
  std::vector<FieldElement> basis() const;
  /// e_1*..e_g* with Tr(e_j* e_k) = delta_jk.
  std::vector<FieldElement> dual_basis() const;
  /// A Z-basis of the different D = {x : x D^-1 in O}.
  std::vector<FieldElement> different_basis() const;

  /// T_jk = Tr(e_j e_k).
  const RatMatrix& gram() const;
  /// det(gram), the discriminant of the order.
  const Rational& discriminant() const;

  /// Isolating intervals at construction time (not refined).
  const std::vector<Interval>& root_intervals() const;

  FieldElement from_basis_coords(const RatVector& v) const;
  FieldElement from_dual_coords(const RatVector& v) const;

  bool operator==(const NumberField& o) const { return data_ == o.data_; }

  const detail::FieldData& data() const { return *data_; }

 private:
  explicit NumberField(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
 public:
  FieldElement(NumberField field, RatVector coords);

  const NumberField& field() const { return field_; }
  const RatVector& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; only meaningful when is_rational().
  Rational rational_value() const { return coords_.front(); }

  /// Matrix of y -> x*y in the power basis (column k = coords of x*theta^k).
  RatMatrix mult_matrix() const;
  RatPoly as_poly() const { return RatPoly(coords_); }

  /// Throws DivisionByZero when x is not invertible.
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& s);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
  friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator-(FieldElement a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }

 private:
  void check_same_field(const FieldElement& o) const;

  NumberField field_;
  RatVector coords_;
};

Rational trace(const FieldElement& x);
Rational norm(const FieldElement& x);

/// (Tr(x e_1), ..., Tr(x e_g)): coordinates of x in the dual basis e*.
RatVector coords_in_dual(const FieldElement& x);
/// (Tr(x e_1*), ..., Tr(x e_g*)): coordinates of x in the order basis e.
RatVector coords_in_basis(const FieldElement& x);

bool in_order(const FieldElement& x);
bool in_inverse_different(const FieldElement& x);
bool in_different(const FieldElement& x);

/// Isolating intervals refined by bisection to width <= 2^-precision.
RealEmbeddingSet real_embeddings(const NumberField& nf, unsigned precision);

/// Enclosure of sigma_i(x) given an enclosure of sigma_i(theta).
Interval embed(const FieldElement& x, const Interval& root);

/// Certified sign of sigma_i(x) for every embedding, ascending root order.
std::vector<int> embedding_signs(const FieldElement& x);

bool is_totally_positive(const FieldElement& x);

namespace detail {

struct FieldData {
  std::size_t degree = 0;
  RatPoly minpoly;
  SturmSequence sturm{RatPoly{}};
  std::vector<Interval> roots;
  RatVector power_traces;     // Tr(theta^i), i < degree
  RatMatrix basis_coords;     // column j = power coords of e_j
  RatMatrix dual_coords;      // column j = power coords of e_j*
  RatMatrix to_dual_coords;   // power coords -> (Tr(x e_j))_j
  RatMatrix to_basis_coords;  // power coords -> (Tr(x e_j*))_j
  RatMatrix gram;
  Rational discriminant;
  // Power coordinates; elements are materialized on request so that the
  // shared data never owns handles to itself.
  std::vector<RatVector> basis;
  std::vector<RatVector> dual_basis;
  std::vector<RatVector> different_basis;
};

}  // namespace detail

}  // namespace hbsiegel

#endif  // HBSIEGEL_NUMFIELD_HPP
