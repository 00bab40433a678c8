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
#ifndef HBSIEGEL_MODEMBED_HPP
#define HBSIEGEL_MODEMBED_HPP

#include "hbsiegel/interval.hpp"
#include "hbsiegel/matrix.hpp"
#include "hbsiegel/numfield.hpp"
#include "hbsiegel/symplectic.hpp"

namespace hbsiegel {

enum class Orientation { Upper = 1, Lower = -1 };

/// Element re + i*im of F (x) Q(i).
class FieldComplex {
 public:
  FieldComplex(FieldElement re, FieldElement im);
  explicit FieldComplex(FieldElement re);

  const FieldElement& re() const { return re_; }
  const FieldElement& im() const { return im_; }

  /// Inverse via conjugate over re^2 + im^2; throws DivisionByZero.
  FieldComplex inverse() const;

  friend FieldComplex operator+(const FieldComplex& x, const FieldComplex& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend FieldComplex operator-(const FieldComplex& x, const FieldComplex& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend FieldComplex operator*(const FieldComplex& x, const FieldComplex& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend FieldComplex operator*(const FieldElement& s, const FieldComplex& x) {
    return {s * x.re_, s * x.im_};
  }
  friend bool operator==(const FieldComplex& x, const FieldComplex& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

 private:
  FieldElement re_, im_;
};

/// Tr(z) computed componentwise, in Q(i).
GaussRational trace(const FieldComplex& z);

/// Point of the Hilbert half-space: im totally positive (Upper) or totally
/// negative (Lower), certified by interval evaluation.
class HBPoint {
 public:
  /// Throws NotUpperHalf when im does not have the required sign at every
  /// real embedding.
  static HBPoint make(FieldElement re, FieldElement im, Orientation o = Orientation::Upper);

  const FieldComplex& value() const { return z_; }
  const FieldElement& re() const { return z_.re(); }
  const FieldElement& im() const { return z_.im(); }
  Orientation orientation() const { return orientation_; }
  const NumberField& field() const { return z_.re().field(); }

  friend bool operator==(const HBPoint& x, const HBPoint& y) {
    return x.z_ == y.z_ && x.orientation_ == y.orientation_;
  }

 private:
  HBPoint(FieldComplex z, Orientation o) : z_(std::move(z)), orientation_(o) {}
  friend HBPoint hb_action(const class HBMatrix& h, const HBPoint& tau);

  FieldComplex z_;
  Orientation orientation_;
};

/// Point of the Siegel half-space with entries in Q(i).
class SiegelPoint {
 public:
  /// Throws NotUpperHalf unless re, im are symmetric and +-im is positive
  /// definite according to the orientation.
  static SiegelPoint make(RatMatrix re, RatMatrix im, Orientation o = Orientation::Upper);

  const RatMatrix& re() const { return re_; }
  const RatMatrix& im() const { return im_; }
  Orientation orientation() const { return orientation_; }
  std::size_t genus() const { return re_.rows(); }
  GaussMatrix as_matrix() const { return to_gauss(re_, im_); }

  friend bool operator==(const SiegelPoint& x, const SiegelPoint& y) {
    return x.re_ == y.re_ && x.im_ == y.im_ && x.orientation_ == y.orientation_;
  }

 private:
  SiegelPoint(RatMatrix re, RatMatrix im, Orientation o)
      : re_(std::move(re)), im_(std::move(im)), orientation_(o) {}

  RatMatrix re_, im_;
  Orientation orientation_;
};

// Interval enclosures of R = (sigma_i(e_j)) and R' = (sigma_i(e_j*)), rows
// indexed by embeddings in ascending root order.
struct EmbeddingData {
  NumberField nf;
  RealEmbeddingSet emb;
  IntervalMatrix r;
  IntervalMatrix rstar;

  /// tR * R', which must enclose the identity.
  IntervalMatrix duality_product() const { return r.transpose() * rstar; }
  /// tR * R, which must enclose the Gram matrix Tr(e_j e_k).
  IntervalMatrix gram_product() const { return r.transpose() * r; }
  bool certified() const { return encloses(duality_product(), RatMatrix::identity(nf.degree())); }
};

/// Builds R, R' at precision p and refines until tR * R' encloses I.
EmbeddingData compute_embedding_data(const NumberField& nf, unsigned precision);

/// Diagonal interval matrix diag(sigma_1(x), ..., sigma_g(x)).
IntervalMatrix embedded_diagonal(const EmbeddingData& ed, const FieldElement& x);

/// Exact image of h in GSp(2g, Q). The blocks are the matrices of
/// multiplication by a, b, c, d between e*- and e-coordinates of
/// D^-1 + O (column vectors). Throws NotInGPrime.
GSpElement iota_bar(const HBMatrix& h);

/// diag(R', R)^-1 * [[a*, b*], [c*, d*]] * diag(R', R) in interval
/// arithmetic, using R'^-1 = tR and R^-1 = tR'.
IntervalMatrix iota_bar_enclosure(const EmbeddingData& ed, const HBMatrix& h);

/// Entry (j, k) = Tr(tau e_j e_k), computed in Q(i). Throws NotUpperHalf
/// for a lower-half point.
SiegelPoint iota_point(const HBPoint& tau);

/// (a tau + b)(c tau + d)^-1. Requires h in SL(D^-1 + O) or det(h) a
/// positive rational (InvalidAction otherwise).
HBPoint hb_action(const HBMatrix& h, const HBPoint& tau);

/// (A tau + B)(C tau + D)^-1 over Q(i). A negative similitude swaps the
/// half-spaces.
SiegelPoint siegel_action(const GSpElement& m, const SiegelPoint& tau);

/// iota(h tau) == iota_bar(h) iota(tau), exactly.
bool check_equivariance(const HBMatrix& h, const HBPoint& tau);

/// trace_form_gram(nf) == standard_form(g).
bool check_symplectic_compat(const NumberField& nf);

}  // namespace hbsiegel

#endif  // HBSIEGEL_MODEMBED_HPP
