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
#ifndef HBSIEGEL_SYMPLECTIC_HPP
#define HBSIEGEL_SYMPLECTIC_HPP

#include <cstddef>
#include <optional>

#include "hbsiegel/matrix.hpp"
#include "hbsiegel/numfield.hpp"

namespace hbsiegel {

/// psi = [[0, I_g], [-I_g, 0]].
RatMatrix standard_form(std::size_t genus);

/// nu with tm * psi * m = nu * psi, nu != 0; nullopt if m is not a
/// symplectic similitude. Throws NonSquare / OddDimension.
std::optional<Rational> gsp_check(const RatMatrix& m);

/// Principal congruence subgroup Gamma(n) of Sp(2g, Z): integral, nu = 1,
/// m = I mod n. Throws LevelTooSmall for n < 3.
bool gamma_n_check(const RatMatrix& m, long level);

class GSpElement {
 public:
  /// Throws InvariantViolation when m is not a symplectic similitude.
  explicit GSpElement(RatMatrix m);

  const RatMatrix& matrix() const { return m_; }
  const Rational& nu() const { return nu_; }
  std::size_t genus() const { return m_.rows() / 2; }

  RatMatrix a() const { return m_.block(0, 0, genus(), genus()); }
  RatMatrix b() const { return m_.block(0, genus(), genus(), genus()); }
  RatMatrix c() const { return m_.block(genus(), 0, genus(), genus()); }
  RatMatrix d() const { return m_.block(genus(), genus(), genus(), genus()); }

  GSpElement inverse() const { return GSpElement(m_.inverse()); }

  friend GSpElement operator*(const GSpElement& x, const GSpElement& y) {
    return GSpElement(x.m_ * y.m_, x.nu_ * y.nu_);
  }
  friend bool operator==(const GSpElement& x, const GSpElement& y) { return x.m_ == y.m_; }

 private:
  GSpElement(RatMatrix m, Rational nu) : m_(std::move(m)), nu_(std::move(nu)) {}

  RatMatrix m_;
  Rational nu_;
};

/// 2x2 matrix [[a, b], [c, d]] over a totally real field.
class HBMatrix {
 public:
  HBMatrix(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

  static HBMatrix identity(const NumberField& nf);

  const NumberField& field() const { return a_.field(); }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  const FieldElement& d() const { return d_; }

  FieldElement det() const { return a_ * d_ - b_ * c_; }
  /// Throws DivisionByZero when det is not invertible.
  HBMatrix inverse() const;

  friend HBMatrix operator*(const HBMatrix& x, const HBMatrix& y);
  friend bool operator==(const HBMatrix& x, const HBMatrix& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  FieldElement a_, b_, c_, d_;
};

/// q with det(h) = q in Q, q != 0 (membership in G'(Q)); nullopt otherwise.
std::optional<Rational> g_prime_check(const HBMatrix& h);

/// Membership in SL(D^-1 + O): det 1, a, d in O, b in D^-1, c in D.
bool sl_dm_o_check(const HBMatrix& h);

/// Membership in Gamma'(n): det 1, a, d in 1 + nO, b in nD^-1, c in nD.
bool gamma_prime_n_check(const HBMatrix& h, long level);

/// Gram matrix of psi'((x1,y1),(x2,y2)) = Tr(x1 y2 - y1 x2) in the ordered
/// basis (e_1*, ..., e_g*, e_1, ..., e_g) of D^-1 + O.
RatMatrix trace_form_gram(const NumberField& nf);

}  // namespace hbsiegel

#endif  // HBSIEGEL_SYMPLECTIC_HPP
