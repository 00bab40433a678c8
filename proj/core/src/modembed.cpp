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
#include "hbsiegel/modembed.hpp"

#include "hbsiegel/errors.hpp"

namespace hbsiegel {

FieldComplex::FieldComplex(FieldElement re, FieldElement im) : re_(std::move(re)), im_(std::move(im)) {
  if (!(re_.field() == im_.field())) throw Error(Errc::FieldMismatch, "real and imaginary parts in different fields");
}

FieldComplex::FieldComplex(FieldElement re) : re_(re), im_(re.field().zero()) {}

FieldComplex FieldComplex::inverse() const {
  const FieldElement n = (re_ * re_ + im_ * im_).inverse();
  return {re_ * n, -im_ * n};
}

GaussRational trace(const FieldComplex& z) { return {trace(z.re()), trace(z.im())}; }

HBPoint HBPoint::make(FieldElement re, FieldElement im, Orientation o) {
  FieldComplex z(std::move(re), std::move(im));
  const FieldElement signed_im = o == Orientation::Upper ? z.im() : -z.im();
  if (!is_totally_positive(signed_im))
    throw Error(Errc::NotUpperHalf, "imaginary part is not totally positive for the orientation");
  return HBPoint(std::move(z), o);
}

SiegelPoint SiegelPoint::make(RatMatrix re, RatMatrix im, Orientation o) {
  if (!re.is_square() || !(re.rows() == im.rows() && re.cols() == im.cols()))
    throw Error(Errc::DimensionMismatch, "Siegel point parts must be square of equal size");
  if (!re.is_symmetric() || !im.is_symmetric())
    throw Error(Errc::NotUpperHalf, "Siegel point must be symmetric");
  const RatMatrix signed_im = o == Orientation::Upper ? im : -im;
  if (!is_positive_definite(signed_im))
    throw Error(Errc::NotUpperHalf, "imaginary part is not definite for the orientation");
  return SiegelPoint(std::move(re), std::move(im), o);
}

IntervalMatrix embedded_diagonal(const EmbeddingData& ed, const FieldElement& x) {
  const std::size_t g = ed.nf.degree();
  IntervalMatrix d(g, g);
  for (std::size_t i = 0; i < g; ++i) d(i, i) = embed(x, ed.emb.intervals[i]);
  return d;
}

EmbeddingData compute_embedding_data(const NumberField& nf, unsigned precision) {
  const std::size_t g = nf.degree();
  const auto basis = nf.basis();
  const auto dual = nf.dual_basis();
  for (unsigned p = precision;; p *= 2) {
    EmbeddingData ed{nf, real_embeddings(nf, p), IntervalMatrix(g, g), IntervalMatrix(g, g)};
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        ed.r(i, j) = embed(basis[j], ed.emb.intervals[i]);
        ed.rstar(i, j) = embed(dual[j], ed.emb.intervals[i]);
      }
    if (ed.certified()) return ed;
  }
}

GSpElement iota_bar(const HBMatrix& h) {
  if (!g_prime_check(h)) throw Error(Errc::NotInGPrime, "det(h) is not a nonzero rational");
  const NumberField& nf = h.field();
  const std::size_t g = nf.degree();
  const auto e = nf.basis();
  const auto es = nf.dual_basis();
  RatMatrix m(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    const RatVector tl = coords_in_dual(h.a() * es[k]);
    const RatVector tr = coords_in_dual(h.b() * e[k]);
    const RatVector bl = coords_in_basis(h.c() * es[k]);
    const RatVector br = coords_in_basis(h.d() * e[k]);
    for (std::size_t j = 0; j < g; ++j) {
      m(j, k) = tl[j];
      m(j, g + k) = tr[j];
      m(g + j, k) = bl[j];
      m(g + j, g + k) = br[j];
    }
  }
  return GSpElement(std::move(m));
}

IntervalMatrix iota_bar_enclosure(const EmbeddingData& ed, const HBMatrix& h) {
  const std::size_t g = ed.nf.degree();
  const IntervalMatrix rt = ed.r.transpose();
  const IntervalMatrix rst = ed.rstar.transpose();
  IntervalMatrix out(2 * g, 2 * g);
  out.set_block(0, 0, rt * embedded_diagonal(ed, h.a()) * ed.rstar);
  out.set_block(0, g, rt * embedded_diagonal(ed, h.b()) * ed.r);
  out.set_block(g, 0, rst * embedded_diagonal(ed, h.c()) * ed.rstar);
  out.set_block(g, g, rst * embedded_diagonal(ed, h.d()) * ed.r);
  return out;
}

SiegelPoint iota_point(const HBPoint& tau) {
  if (tau.orientation() != Orientation::Upper)
    throw Error(Errc::NotUpperHalf, "iota is evaluated on the upper half-space");
  const NumberField& nf = tau.field();
  const std::size_t g = nf.degree();
  const auto e = nf.basis();
  RatMatrix re(g, g), im(g, g);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t k = j; k < g; ++k) {
      const FieldElement ejk = e[j] * e[k];
      re(j, k) = re(k, j) = trace(tau.re() * ejk);
      im(j, k) = im(k, j) = trace(tau.im() * ejk);
    }
  return SiegelPoint::make(std::move(re), std::move(im), Orientation::Upper);
}

HBPoint hb_action(const HBMatrix& h, const HBPoint& tau) {
  if (!(h.field() == tau.field())) throw Error(Errc::FieldMismatch, "matrix and point over different fields");
  const auto q = g_prime_check(h);
  if (!sl_dm_o_check(h) && !(q && *q > 0))
    throw Error(Errc::InvalidAction, "h must lie in SL(D^-1 + O) or have positive rational determinant");
  const FieldComplex& z = tau.value();
  const FieldComplex num = h.a() * z + FieldComplex(h.b());
  const FieldComplex den = h.c() * z + FieldComplex(h.d());
  FieldComplex inv = [&] {
    try {
      return den.inverse();
    } catch (const Error&) {
      throw Error(Errc::SingularDenominator, "c tau + d is not invertible");
    }
  }();
  // Im of the image is det(h) Im(tau) / |c tau + d|^2, so the orientation is kept.
  return HBPoint(num * inv, tau.orientation());
}

SiegelPoint siegel_action(const GSpElement& m, const SiegelPoint& tau) {
  if (m.genus() != tau.genus()) throw Error(Errc::DimensionMismatch, "genus mismatch");
  const GaussMatrix z = tau.as_matrix();
  const auto lift = [](const RatMatrix& r) { return to_gauss(r, RatMatrix(r.rows(), r.cols())); };
  const GaussMatrix num = lift(m.a()) * z + lift(m.b());
  const GaussMatrix den = lift(m.c()) * z + lift(m.d());
  const auto inv = den.try_inverse();
  if (!inv) throw Error(Errc::SingularDenominator, "C tau + D is not invertible");
  const GaussMatrix image = num * *inv;
  if (!image.is_symmetric()) throw Error(Errc::InvariantViolation, "Moebius image is not symmetric");
  const Orientation o = (m.nu() > 0) == (tau.orientation() == Orientation::Upper) ? Orientation::Upper
                                                                                  : Orientation::Lower;
  return SiegelPoint::make(real_part(image), imag_part(image), o);
}

bool check_equivariance(const HBMatrix& h, const HBPoint& tau) {
  const SiegelPoint lhs = iota_point(hb_action(h, tau));
  const SiegelPoint rhs = siegel_action(iota_bar(h), iota_point(tau));
  return lhs == rhs;
}

bool check_symplectic_compat(const NumberField& nf) {
  return trace_form_gram(nf) == standard_form(nf.degree());
}

}  // namespace hbsiegel
