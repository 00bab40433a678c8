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
#ifndef HBSIEGEL_SYMREP_HPP
#define HBSIEGEL_SYMREP_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hbsiegel/matrix.hpp"
#include "hbsiegel/rational.hpp"

namespace hbsiegel {

using Exponents = std::vector<int>;

// Element of Sym^k(Q^2g), written as a homogeneous polynomial of degree k
// in the variables x_1..x_2g. Zero coefficients are never stored. The twist
// is a formal Tate twist label; operations preserve it.
class SymTensor {
 public:
  SymTensor(std::size_t genus, int degree, int twist = 0);

  static SymTensor monomial(std::size_t genus, Exponents alpha, Rational coeff = 1, int twist = 0);

  std::size_t genus() const { return genus_; }
  std::size_t variables() const { return 2 * genus_; }
  int degree() const { return degree_; }
  int twist() const { return twist_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Exponents& alpha) const;
  /// Throws DegreeMismatch when |alpha| != degree or the length is wrong.
  void add_term(const Exponents& alpha, const Rational& c);

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator*=(const Rational& s);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator*(SymTensor a, const Rational& s) { return a *= s; }
  friend SymTensor operator*(const Rational& s, SymTensor a) { return a *= s; }
  friend bool operator==(const SymTensor& a, const SymTensor& b) {
    return a.genus_ == b.genus_ && a.degree_ == b.degree_ && a.twist_ == b.twist_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t genus_;
  int degree_;
  int twist_;
  std::map<Exponents, Rational> terms_;
};

/// Element of the dual of Q^2g.
using DualVector = RatVector;

/// binomial(2g + k - 1, k).
std::uint64_t sym_dim(std::size_t genus, int degree);

/// All exponent vectors of length 2g and total degree k, in descending
/// lexicographic order (x_1^k first).
std::vector<Exponents> monomials(std::size_t genus, int degree);

/// Substitution x_i -> sum_j m_ji x_j. Throws SingularMatrix,
/// DegreeMismatch (matrix size differs from 2g).
SymTensor sym_action(const RatMatrix& m, const SymTensor& v);

/// Inverse-transpose action on the dual.
DualVector dual_action(const RatMatrix& m, const DualVector& phi);

/// x^alpha (x) phi -> sum_i alpha_i phi_i x^(alpha - delta_i). Throws
/// DegreeZero for a degree-0 tensor and DimensionMismatch for a wrong phi.
SymTensor contraction(const SymTensor& v, const DualVector& phi);

/// Degree-k component of an element of prod_k Sym^k, zero if absent.
SymTensor product_projection(const std::map<int, SymTensor>& components, std::size_t genus, int degree);

struct ObstructionReport {
  bool contradiction = false;
  std::vector<long> doubled_weights;   // weights of h_r o w: 2 w_i
  std::vector<long> required_weights;  // all equal to 1
};

/// A morphism G_m -> GSp(2r) with weights w_1..w_2r composed with z -> z zbar
/// has even weights 2 w_i, while h_r composed with the weight cocharacter
/// has all weights 1. Throws WrongLength unless |w| = 2r, r >= 1.
ObstructionReport parity_obstruction(const std::vector<long>& weights, std::size_t r);

}  // namespace hbsiegel

#endif  // HBSIEGEL_SYMREP_HPP
