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
#include "hbsiegel/numfield.hpp"

#include <optional>
#include <utility>

#include "hbsiegel/errors.hpp"
#include "hbsiegel/lattice.hpp"

namespace hbsiegel {

namespace {

// a * b mod f for monic f of degree g; a, b have length g.
RatVector mul_mod(const RatVector& a, const RatVector& b, const RatPoly& f) {
  const std::size_t g = a.size();
  RatVector prod(2 * g - 1);
  for (std::size_t i = 0; i < g; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < g; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  const RatVector& fc = f.coeffs();
  for (std::size_t k = prod.size(); k-- > g;) {
    const Rational c = prod[k];
    if (c == 0) continue;
    // theta^k = theta^(k-g) * theta^g = -theta^(k-g) * sum_{i<g} f_i theta^i
    for (std::size_t i = 0; i < g; ++i) prod[k - g + i] -= c * fc[i];
  }
  prod.resize(g);
  return prod;
}

RatVector column(const RatMatrix& m, std::size_t c) {
  RatVector v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

RatMatrix from_columns(const std::vector<RatVector>& cols) {
  RatMatrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
  return m;
}

RatVector unit(std::size_t g, std::size_t i) {
  RatVector v(g);
  v[i] = 1;
  return v;
}

}  // namespace

NumberField NumberField::create(const RatVector& minpoly, const std::vector<RatVector>& basis) {
  if (minpoly.size() < 2) throw Error(Errc::InvalidInput, "defining polynomial must have degree >= 1");
  if (minpoly.back() != 1) throw Error(Errc::InvalidInput, "defining polynomial must be monic");
  auto d = std::make_shared<detail::FieldData>();
  const std::size_t g = minpoly.size() - 1;
  d->degree = g;
  d->minpoly = RatPoly(minpoly);

  if (gcd(d->minpoly, d->minpoly.derivative()).degree() > 0)
    throw Error(Errc::RepeatedRoots, "defining polynomial is not squarefree");
  d->sturm = SturmSequence(d->minpoly);
  if (d->sturm.count_real_roots() != static_cast<int>(g))
    throw Error(Errc::NotTotallyReal, "defining polynomial has non-real roots");
  d->roots = isolate_real_roots(d->minpoly);

  if (basis.size() != g) throw Error(Errc::InvalidInput, "basis must have exactly degree-many vectors");
  for (const auto& v : basis)
    if (v.size() != g) throw Error(Errc::InvalidInput, "basis vector has wrong length");
  d->basis_coords = from_columns(basis);
  const auto basis_inv = d->basis_coords.try_inverse();
  if (!basis_inv) throw Error(Errc::SingularBasis, "basis vectors are linearly dependent");

  const auto in_span = [&](const RatVector& v) { return is_integral(*basis_inv * v); };
  if (!in_span(unit(g, 0))) throw Error(Errc::NotAnOrder, "1 is not in the Z-span of the basis");
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = j; k < g; ++k)
      if (!in_span(mul_mod(basis[j], basis[k], d->minpoly)))
        throw Error(Errc::NotAnOrder, "basis is not closed under multiplication");

  // hankel(a, b) = Tr(theta^(a+b)); Tr(theta^m) = trace of multiplication by theta^m.
  RatVector theta_pow(g);
  theta_pow[0] = 1;
  RatVector theta = g > 1 ? unit(g, 1) : RatVector{-minpoly[0]};
  std::vector<RatVector> powers;  // theta^m for m <= 2g-2
  for (std::size_t m = 0; m + 1 < 2 * g; ++m) {
    powers.push_back(theta_pow);
    theta_pow = mul_mod(theta_pow, theta, d->minpoly);
  }
  std::vector<Rational> trace_of_power(powers.size());
  for (std::size_t m = 0; m < powers.size(); ++m) {
    RatVector basis_k(g);
    basis_k[0] = 1;
    Rational t = 0;
    for (std::size_t k = 0; k < g; ++k) {
      t += mul_mod(powers[m], basis_k, d->minpoly)[k];
      basis_k = mul_mod(basis_k, theta, d->minpoly);
    }
    trace_of_power[m] = t;
  }
  d->power_traces.assign(trace_of_power.begin(), trace_of_power.begin() + static_cast<std::ptrdiff_t>(g));
  RatMatrix hankel(g, g);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) hankel(a, b) = trace_of_power[a + b];

  d->gram = d->basis_coords.transpose() * hankel * d->basis_coords;
  d->discriminant = d->gram.determinant();
  const auto gram_inv = d->gram.try_inverse();
  if (!gram_inv) throw Error(Errc::SingularBasis, "trace form is degenerate on the basis");
  d->dual_coords = d->basis_coords * *gram_inv;
  d->to_dual_coords = d->basis_coords.transpose() * hankel;
  d->to_basis_coords = d->dual_coords.transpose() * hankel;

  for (std::size_t j = 0; j < g; ++j) {
    d->basis.push_back(column(d->basis_coords, j));
    d->dual_basis.push_back(column(d->dual_coords, j));
  }

  // D is the trace dual of the Z-module spanned by all e_j* e_k*.
  std::vector<RatVector> products;
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = j; k < g; ++k)
      products.push_back(mul_mod(d->dual_basis[j], d->dual_basis[k], d->minpoly));
  const RatMatrix span = from_columns(zspan_basis(products));
  const RatMatrix different = span * (span.transpose() * hankel * span).inverse();
  for (std::size_t j = 0; j < g; ++j) d->different_basis.push_back(column(different, j));

  return NumberField(std::move(d));
}

std::size_t NumberField::degree() const { return data_->degree; }
const RatPoly& NumberField::minpoly() const { return data_->minpoly; }

FieldElement NumberField::element(RatVector power_coords) const {
  return FieldElement(*this, std::move(power_coords));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  RatVector v(degree());
  v[0] = q;
  return element(std::move(v));
}

FieldElement NumberField::zero() const { return from_rational(0); }
FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::theta() const {
  if (degree() == 1) return from_rational(-data_->minpoly.coeff(0));
  return element(unit(degree(), 1));
}

std::vector<FieldElement> NumberField::basis() const {
  std::vector<FieldElement> out;
  for (const auto& v : data_->basis) out.push_back(element(v));
  return out;
}

std::vector<FieldElement> NumberField::dual_basis() const {
  std::vector<FieldElement> out;
  for (const auto& v : data_->dual_basis) out.push_back(element(v));
  return out;
}

std::vector<FieldElement> NumberField::different_basis() const {
  std::vector<FieldElement> out;
  for (const auto& v : data_->different_basis) out.push_back(element(v));
  return out;
}

const RatMatrix& NumberField::gram() const { return data_->gram; }
const Rational& NumberField::discriminant() const { return data_->discriminant; }
const std::vector<Interval>& NumberField::root_intervals() const { return data_->roots; }

FieldElement NumberField::from_basis_coords(const RatVector& v) const {
  return element(data_->basis_coords * v);
}

FieldElement NumberField::from_dual_coords(const RatVector& v) const {
  return element(data_->dual_coords * v);
}

FieldElement::FieldElement(NumberField field, RatVector coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.degree())
    throw Error(Errc::DimensionMismatch, "coordinate vector length differs from field degree");
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "elements of different fields");
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

RatMatrix FieldElement::mult_matrix() const {
  const std::size_t g = coords_.size();
  RatMatrix m(g, g);
  for (std::size_t k = 0; k < g; ++k) {
    const RatVector col = mul_mod(coords_, unit(g, k), field_.minpoly());
    for (std::size_t r = 0; r < g; ++r) m(r, k) = col[r];
  }
  return m;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const auto inv = mult_matrix().try_inverse();
  if (!inv) throw Error(Errc::DivisionByZero, "element is a zero divisor");
  return FieldElement(field_, column(*inv, 0));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  coords_ = mul_mod(coords_, o.coords_, field_.minpoly());
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

FieldElement operator-(FieldElement a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Rational trace(const FieldElement& x) {
  const auto& t = x.field().data().power_traces;
  Rational s = 0;
  for (std::size_t i = 0; i < t.size(); ++i) s += x.coords()[i] * t[i];
  return s;
}

Rational norm(const FieldElement& x) { return x.mult_matrix().determinant(); }

RatVector coords_in_dual(const FieldElement& x) {
  return x.field().data().to_dual_coords * x.coords();
}

RatVector coords_in_basis(const FieldElement& x) {
  return x.field().data().to_basis_coords * x.coords();
}

bool in_order(const FieldElement& x) { return is_integral(coords_in_basis(x)); }

bool in_inverse_different(const FieldElement& x) { return is_integral(coords_in_dual(x)); }

bool in_different(const FieldElement& x) {
  for (const auto& e : x.field().dual_basis())
    if (!in_order(x * e)) return false;
  return true;
}

RealEmbeddingSet real_embeddings(const NumberField& nf, unsigned precision) {
  if (precision < 1) throw Error(Errc::InvalidInput, "precision must be >= 1");
  RealEmbeddingSet set;
  set.precision = precision;
  for (const auto& iv : nf.root_intervals())
    set.intervals.push_back(refine_root(nf.minpoly(), iv, precision));
  return set;
}

Interval embed(const FieldElement& x, const Interval& root) { return x.as_poly().eval(root); }

std::vector<int> embedding_signs(const FieldElement& x) {
  const NumberField& nf = x.field();
  const RatPoly xp = x.as_poly();
  std::optional<RatPoly> common;  // gcd(f, x), computed on first ambiguity
  std::vector<int> signs;
  for (Interval iv : nf.root_intervals()) {
    unsigned bits = 16;
    while (true) {
      const Interval v = xp.eval(iv);
      if (v.positive()) {
        signs.push_back(1);
        break;
      }
      if (v.negative()) {
        signs.push_back(-1);
        break;
      }
      if (iv.width() == 0) {
        signs.push_back(0);  // exact rational root and x vanishes there
        break;
      }
      if (!common) common = gcd(nf.minpoly(), xp);
      if (common->degree() > 0 && SturmSequence(*common).count_roots(iv.lo, iv.hi) > 0) {
        signs.push_back(0);
        break;
      }
      iv = refine_root(nf.minpoly(), iv, bits);
      bits *= 2;
    }
  }
  return signs;
}

bool is_totally_positive(const FieldElement& x) {
  for (int s : embedding_signs(x))
    if (s <= 0) return false;
  return true;
}

}  // namespace hbsiegel
