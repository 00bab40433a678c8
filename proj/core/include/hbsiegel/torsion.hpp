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
#ifndef HBSIEGEL_TORSION_HPP
#define HBSIEGEL_TORSION_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "hbsiegel/modembed.hpp"
#include "hbsiegel/numfield.hpp"
#include "hbsiegel/symplectic.hpp"

namespace hbsiegel {

// Conventions. Lattice vectors are columns. A 2x2 matrix h over F acts on
// (x; y) in D^-1 + O by (x; y) -> (a x + b y; c x + d y), and a 2g x 2g
// matrix acts on Z^2g by m * v. In these conventions iota_bar(h) is the
// matrix of h in the basis (e_1*, ..., e_g*, e_1, ..., e_g), so transport
// of torsion points intertwines the two actions. Semidirect products
// compose as (v1, g1)(v2, g2) = (v1 + g1 v2, g1 g2).

/// Point of (1/n)Z^2g / Z^2g, stored reduced into [0, 1)^2g.
class TorsionPoint {
 public:
  /// Throws InvalidTorsion unless n >= 1 and n*v is integral.
  TorsionPoint(RatVector v, long level);

  const RatVector& coords() const { return v_; }
  long level() const { return level_; }
  std::size_t genus() const { return v_.size() / 2; }
  bool is_zero() const;

  /// Least k >= 1 with k*v integral.
  long order() const;

  friend TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b);
  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.level_ == b.level_ && a.v_ == b.v_;
  }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) { return a.v_ < b.v_; }

 private:
  RatVector v_;
  long level_;
};

/// Lazily enumerates all n^2g points of (1/n)Z^2g / Z^2g in lexicographic
/// order of the numerators.
class TorsionEnumerator {
 public:
  TorsionEnumerator(long level, std::size_t genus);

  std::uint64_t size() const { return total_; }
  std::optional<TorsionPoint> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = TorsionPoint;
    using difference_type = std::ptrdiff_t;
    using pointer = const TorsionPoint*;
    using reference = const TorsionPoint&;

    iterator() = default;
    explicit iterator(TorsionEnumerator* e) : e_(e), cur_(e->next()) {}
    reference operator*() const { return *cur_; }
    pointer operator->() const { return &*cur_; }
    iterator& operator++() {
      cur_ = e_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.cur_.has_value() == b.cur_.has_value();
    }

   private:
    TorsionEnumerator* e_ = nullptr;
    std::optional<TorsionPoint> cur_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  long level_;
  std::vector<long> digits_;
  std::uint64_t total_;
  std::uint64_t produced_ = 0;
};

/// enumerate_torsion(n, g): the lazy stream above. Throws InvalidTorsion for
/// n < 1 or g < 1.
TorsionEnumerator enumerate_torsion(long level, std::size_t genus);

/// Point (x, y) of (1/n)(D^-1 + O) / (D^-1 + O), stored reduced: the e*-
/// coordinates of x and the e-coordinates of y lie in [0, 1).
class HBTorsionPoint {
 public:
  /// Throws InvalidTorsion unless n x in D^-1 and n y in O.
  static HBTorsionPoint make(const FieldElement& x, const FieldElement& y, long level);

  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  long level() const { return level_; }
  const NumberField& field() const { return x_.field(); }

  /// Least k >= 1 with k x in D^-1 and k y in O (decided by trace pairing).
  long order() const;

  friend HBTorsionPoint operator+(const HBTorsionPoint& a, const HBTorsionPoint& b);
  friend bool operator==(const HBTorsionPoint& a, const HBTorsionPoint& b) {
    return a.level_ == b.level_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  HBTorsionPoint(FieldElement x, FieldElement y, long level)
      : x_(std::move(x)), y_(std::move(y)), level_(level) {}

  FieldElement x_, y_;
  long level_;
};

/// All n-torsion of D^-1 + O, generated from Hermite-normal-form Z-bases of
/// D^-1 and O (not from e*, e), so that comparing with transport is a
/// non-trivial bijectivity check.
std::vector<HBTorsionPoint> enumerate_hb_torsion(const NumberField& nf, long level);

/// (Tr(x e_1), ..., Tr(x e_g), Tr(y e_1*), ..., Tr(y e_g*)) mod Z^2g.
TorsionPoint transport(const HBTorsionPoint& t);

/// v1 + tau v2 in the fiber C^g / (Z^g + tau Z^g) at tau.
std::vector<GaussRational> section_value(const TorsionPoint& v, const SiegelPoint& tau);

/// e*-coordinates (Tr(z e_j))_j of z = x + tau y in F (x) Q(i): the point
/// (x, y) of the Hilbert-Blumenthal fiber, carried into Siegel lattice
/// coordinates.
std::vector<GaussRational> hb_section_value(const FieldElement& x, const FieldElement& y,
                                            const HBPoint& tau);

/// Whether w lies in Z^g + tau Z^g: solves w = p + tau q over the reals via
/// the real and imaginary parts and tests p, q for integrality.
bool in_fiber_lattice(const std::vector<GaussRational>& w, const SiegelPoint& tau);

/// hb_section_value(t, tau) == section_value(transport(t), iota(tau)) modulo
/// the fiber lattice at iota(tau).
bool check_cartesian_transport(const HBTorsionPoint& t, const HBPoint& tau);

/// (x; y) -> (a x + b y; c x + d y), reduced.
HBTorsionPoint act(const HBMatrix& h, const HBTorsionPoint& t);
/// v -> m v, reduced.
TorsionPoint act(const RatMatrix& m, const TorsionPoint& v);

/// transport(h . t) == iota_bar(h) . transport(t). Throws NotInLatticeGroup
/// unless h is in SL(D^-1 + O).
bool lattice_equivariance(const HBTorsionPoint& t, const HBMatrix& h);

/// Element of Lambda(n) = Z^2g x| Gamma(n).
class SiegelSemidirect {
 public:
  /// Throws NotInLatticeGroup unless v is integral and m is in Gamma(n).
  static SiegelSemidirect make(RatVector v, RatMatrix m, long level);

  const RatVector& lattice() const { return v_; }
  const RatMatrix& group() const { return m_; }
  long level() const { return level_; }

  friend SiegelSemidirect operator*(const SiegelSemidirect& a, const SiegelSemidirect& b);
  friend bool operator==(const SiegelSemidirect& a, const SiegelSemidirect& b) {
    return a.v_ == b.v_ && a.m_ == b.m_ && a.level_ == b.level_;
  }

 private:
  SiegelSemidirect(RatVector v, RatMatrix m, long level)
      : v_(std::move(v)), m_(std::move(m)), level_(level) {}

  RatVector v_;
  RatMatrix m_;
  long level_;
};

/// Element of Lambda'(n) = (D^-1 + O) x| Gamma'(n).
class HBSemidirect {
 public:
  /// Throws NotInLatticeGroup unless x in D^-1, y in O, h in Gamma'(n).
  static HBSemidirect make(FieldElement x, FieldElement y, HBMatrix h, long level);

  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }
  const HBMatrix& group() const { return h_; }
  long level() const { return level_; }

  friend HBSemidirect operator*(const HBSemidirect& a, const HBSemidirect& b);
  friend bool operator==(const HBSemidirect& a, const HBSemidirect& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.h_ == b.h_ && a.level_ == b.level_;
  }

 private:
  HBSemidirect(FieldElement x, FieldElement y, HBMatrix h, long level)
      : x_(std::move(x)), y_(std::move(y)), h_(std::move(h)), level_(level) {}

  FieldElement x_, y_;
  HBMatrix h_;
  long level_;
};

/// Lambda'(n) -> Lambda(n): lattice part to (e*, e)-coordinates, group part
/// through iota_bar.
SiegelSemidirect map_semidirect(const HBSemidirect& e);

}  // namespace hbsiegel

#endif  // HBSIEGEL_TORSION_HPP
