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
#include "hbsiegel/symplectic.hpp"

#include "hbsiegel/errors.hpp"

namespace hbsiegel {

RatMatrix standard_form(std::size_t genus) {
  if (genus < 1) throw Error(Errc::InvalidInput, "genus must be >= 1");
  RatMatrix psi(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    psi(i, genus + i) = 1;
    psi(genus + i, i) = -1;
  }
  return psi;
}

std::optional<Rational> gsp_check(const RatMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NonSquare, "matrix is not square");
  if (m.rows() == 0 || m.rows() % 2 != 0) throw Error(Errc::OddDimension, "matrix size is not even");
  const std::size_t g = m.rows() / 2;
  const RatMatrix psi = standard_form(g);
  const RatMatrix pulled = m.transpose() * psi * m;
  const Rational nu = pulled(0, g);
  if (nu == 0 || !(pulled == psi * nu)) return std::nullopt;
  return nu;
}

bool gamma_n_check(const RatMatrix& m, long level) {
  if (level < 3) throw Error(Errc::LevelTooSmall, "level must be >= 3");
  const auto nu = gsp_check(m);
  if (!nu || *nu != 1 || !is_integral(m)) return false;
  const Integer n(level);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer delta = m(r, c).get_num() - (r == c ? 1 : 0);
      if (!mpz_divisible_p(delta.get_mpz_t(), n.get_mpz_t())) return false;
    }
  return true;
}

GSpElement::GSpElement(RatMatrix m) : m_(std::move(m)) {
  const auto nu = gsp_check(m_);
  if (!nu) throw Error(Errc::InvariantViolation, "matrix is not a symplectic similitude");
  nu_ = *nu;
}

HBMatrix::HBMatrix(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const NumberField& f = a_.field();
  if (!(b_.field() == f && c_.field() == f && d_.field() == f))
    throw Error(Errc::FieldMismatch, "matrix entries from different fields");
}

HBMatrix HBMatrix::identity(const NumberField& nf) {
  return HBMatrix(nf.one(), nf.zero(), nf.zero(), nf.one());
}

HBMatrix HBMatrix::inverse() const {
  const FieldElement inv = det().inverse();
  return HBMatrix(d_ * inv, -b_ * inv, -c_ * inv, a_ * inv);
}

HBMatrix operator*(const HBMatrix& x, const HBMatrix& y) {
  return HBMatrix(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                  x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::optional<Rational> g_prime_check(const HBMatrix& h) {
  const FieldElement det = h.det();
  if (!det.is_rational() || det.is_zero()) return std::nullopt;
  return det.rational_value();
}

bool sl_dm_o_check(const HBMatrix& h) {
  return h.det() == h.field().one() && in_order(h.a()) && in_order(h.d()) &&
         in_inverse_different(h.b()) && in_different(h.c());
}

bool gamma_prime_n_check(const HBMatrix& h, long level) {
  if (level < 3) throw Error(Errc::LevelTooSmall, "level must be >= 3");
  const NumberField& nf = h.field();
  const Rational inv_n(1, level);
  const FieldElement one = nf.one();
  return h.det() == one && in_order((h.a() - one) * inv_n) && in_order((h.d() - one) * inv_n) &&
         in_inverse_different(h.b() * inv_n) && in_different(h.c() * inv_n);
}

RatMatrix trace_form_gram(const NumberField& nf) {
  const std::size_t g = nf.degree();
  // Basis vector i of D^-1 + O as a pair (x, y).
  std::vector<std::pair<FieldElement, FieldElement>> vecs;
  for (const auto& e : nf.dual_basis()) vecs.emplace_back(e, nf.zero());
  for (const auto& e : nf.basis()) vecs.emplace_back(nf.zero(), e);
  RatMatrix gram(2 * g, 2 * g);
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = 0; j < 2 * g; ++j) {
      const auto& [x1, y1] = vecs[i];
      const auto& [x2, y2] = vecs[j];
      gram(i, j) = trace(x1 * y2 - y1 * x2);
    }
  return gram;
}

}  // namespace hbsiegel
