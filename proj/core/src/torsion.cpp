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
#include "hbsiegel/torsion.hpp"

#include <limits>

#include "hbsiegel/errors.hpp"
#include "hbsiegel/lattice.hpp"

namespace hbsiegel {

namespace {

FieldElement reduce_dual(const FieldElement& x) {
  return x.field().from_dual_coords(frac(coords_in_dual(x)));
}

FieldElement reduce_order(const FieldElement& y) {
  return y.field().from_basis_coords(frac(coords_in_basis(y)));
}

RatVector concat(const RatVector& a, const RatVector& b) {
  RatVector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

TorsionPoint::TorsionPoint(RatVector v, long level) : v_(frac(v)), level_(level) {
  if (level < 1) throw Error(Errc::InvalidTorsion, "torsion level must be >= 1");
  if (v_.empty() || v_.size() % 2 != 0) throw Error(Errc::InvalidTorsion, "torsion vector must have even length");
  for (const auto& q : v_)
    if (!is_integer(q * level)) throw Error(Errc::InvalidTorsion, "n * v is not integral");
}

bool TorsionPoint::is_zero() const {
  for (const auto& q : v_)
    if (q != 0) return false;
  return true;
}

long TorsionPoint::order() const { return lcm_of_denominators(v_).get_si(); }

TorsionPoint operator+(const TorsionPoint& a, const TorsionPoint& b) {
  if (a.v_.size() != b.v_.size() || a.level_ != b.level_)
    throw Error(Errc::DimensionMismatch, "torsion points of different shape");
  RatVector s(a.v_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.v_[i] + b.v_[i];
  return TorsionPoint(std::move(s), a.level_);
}

TorsionEnumerator::TorsionEnumerator(long level, std::size_t genus)
    : level_(level), digits_(2 * genus, 0) {
  if (level < 1 || genus < 1) throw Error(Errc::InvalidTorsion, "enumeration needs n >= 1 and g >= 1");
  total_ = 1;
  for (std::size_t i = 0; i < 2 * genus; ++i) {
    if (total_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(level))
      throw Error(Errc::BudgetExceeded, "torsion count overflows 64 bits");
    total_ *= static_cast<std::uint64_t>(level);
  }
}

std::optional<TorsionPoint> TorsionEnumerator::next() {
  if (produced_ == total_) return std::nullopt;
  RatVector v(digits_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = ratio(digits_[i], level_);
  ++produced_;
  // Odometer, last coordinate fastest.
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < level_) break;
    digits_[i] = 0;
  }
  return TorsionPoint(std::move(v), level_);
}

TorsionEnumerator enumerate_torsion(long level, std::size_t genus) {
  return TorsionEnumerator(level, genus);
}

HBTorsionPoint HBTorsionPoint::make(const FieldElement& x, const FieldElement& y, long level) {
  if (level < 1) throw Error(Errc::InvalidTorsion, "torsion level must be >= 1");
  if (!(x.field() == y.field())) throw Error(Errc::FieldMismatch, "torsion coordinates in different fields");
  const Rational n(level);
  if (!in_inverse_different(x * n)) throw Error(Errc::InvalidTorsion, "n x is not in the inverse different");
  if (!in_order(y * n)) throw Error(Errc::InvalidTorsion, "n y is not in the order");
  return HBTorsionPoint(reduce_dual(x), reduce_order(y), level);
}

long HBTorsionPoint::order() const {
  for (long k = 1; k < level_; ++k) {
    const Rational q(k);
    if (in_inverse_different(x_ * q) && in_order(y_ * q)) return k;
  }
  return level_;
}

HBTorsionPoint operator+(const HBTorsionPoint& a, const HBTorsionPoint& b) {
  if (a.level_ != b.level_) throw Error(Errc::DimensionMismatch, "torsion points of different level");
  return HBTorsionPoint::make(a.x_ + b.x_, a.y_ + b.y_, a.level_);
}

std::vector<HBTorsionPoint> enumerate_hb_torsion(const NumberField& nf, long level) {
  if (level < 1) throw Error(Errc::InvalidTorsion, "torsion level must be >= 1");
  const auto to_coords = [](const std::vector<FieldElement>& es) {
    std::vector<RatVector> out;
    for (const auto& e : es) out.push_back(e.coords());
    return out;
  };
  const auto dual_hnf = zspan_basis(to_coords(nf.dual_basis()));
  const auto order_hnf = zspan_basis(to_coords(nf.basis()));
  std::vector<FieldElement> gens;
  for (const auto& v : dual_hnf) gens.push_back(nf.element(v) * Rational(1, level));
  for (const auto& v : order_hnf) gens.push_back(nf.element(v) * Rational(1, level));

  const std::size_t g = nf.degree();
  std::vector<HBTorsionPoint> out;
  std::vector<long> digits(2 * g, 0);
  while (true) {
    FieldElement x = nf.zero(), y = nf.zero();
    for (std::size_t i = 0; i < g; ++i) {
      x += gens[i] * Rational(digits[i]);
      y += gens[g + i] * Rational(digits[g + i]);
    }
    out.push_back(HBTorsionPoint::make(x, y, level));
    std::size_t i = digits.size();
    while (i-- > 0) {
      if (++digits[i] < level) break;
      digits[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

TorsionPoint transport(const HBTorsionPoint& t) {
  return TorsionPoint(concat(coords_in_dual(t.x()), coords_in_basis(t.y())), t.level());
}

std::vector<GaussRational> section_value(const TorsionPoint& v, const SiegelPoint& tau) {
  const std::size_t g = tau.genus();
  if (v.genus() != g) throw Error(Errc::DimensionMismatch, "torsion point and Siegel point genus differ");
  std::vector<GaussRational> out(g);
  for (std::size_t j = 0; j < g; ++j) {
    GaussRational s(v.coords()[j]);
    for (std::size_t k = 0; k < g; ++k) {
      const Rational& vk = v.coords()[g + k];
      s += GaussRational(tau.re()(j, k) * vk, tau.im()(j, k) * vk);
    }
    out[j] = s;
  }
  return out;
}

std::vector<GaussRational> hb_section_value(const FieldElement& x, const FieldElement& y,
                                            const HBPoint& tau) {
  const FieldComplex z = FieldComplex(x) + y * tau.value();
  const RatVector re = coords_in_dual(z.re());
  const RatVector im = coords_in_dual(z.im());
  std::vector<GaussRational> out;
  for (std::size_t j = 0; j < re.size(); ++j) out.emplace_back(re[j], im[j]);
  return out;
}

bool in_fiber_lattice(const std::vector<GaussRational>& w, const SiegelPoint& tau) {
  const std::size_t g = tau.genus();
  if (w.size() != g) throw Error(Errc::DimensionMismatch, "fiber vector has wrong length");
  RatVector re(g), im(g);
  for (std::size_t j = 0; j < g; ++j) {
    re[j] = w[j].re;
    im[j] = w[j].im;
  }
  // w = p + (X + iY) q with p, q real  =>  q = Y^-1 Im w, p = Re w - X q.
  const RatVector q = tau.im().inverse() * im;
  const RatVector xq = tau.re() * q;
  RatVector p(g);
  for (std::size_t j = 0; j < g; ++j) p[j] = re[j] - xq[j];
  return is_integral(p) && is_integral(q);
}

bool check_cartesian_transport(const HBTorsionPoint& t, const HBPoint& tau) {
  const SiegelPoint image = iota_point(tau);
  const auto lhs = hb_section_value(t.x(), t.y(), tau);
  const auto rhs = section_value(transport(t), image);
  std::vector<GaussRational> diff(lhs.size());
  for (std::size_t j = 0; j < lhs.size(); ++j) diff[j] = lhs[j] - rhs[j];
  return in_fiber_lattice(diff, image);
}

HBTorsionPoint act(const HBMatrix& h, const HBTorsionPoint& t) {
  return HBTorsionPoint::make(h.a() * t.x() + h.b() * t.y(), h.c() * t.x() + h.d() * t.y(), t.level());
}

TorsionPoint act(const RatMatrix& m, const TorsionPoint& v) {
  return TorsionPoint(m * v.coords(), v.level());
}

bool lattice_equivariance(const HBTorsionPoint& t, const HBMatrix& h) {
  if (!sl_dm_o_check(h)) throw Error(Errc::NotInLatticeGroup, "h is not in SL(D^-1 + O)");
  return transport(act(h, t)) == act(iota_bar(h).matrix(), transport(t));
}

SiegelSemidirect SiegelSemidirect::make(RatVector v, RatMatrix m, long level) {
  if (v.size() != m.rows() || !is_integral(v))
    throw Error(Errc::NotInLatticeGroup, "lattice part must be an integral vector of matching size");
  if (!gamma_n_check(m, level)) throw Error(Errc::NotInLatticeGroup, "group part is not in Gamma(n)");
  return SiegelSemidirect(std::move(v), std::move(m), level);
}

SiegelSemidirect operator*(const SiegelSemidirect& a, const SiegelSemidirect& b) {
  if (a.level_ != b.level_) throw Error(Errc::DimensionMismatch, "semidirect elements of different level");
  RatVector v = a.m_ * b.v_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += a.v_[i];
  return SiegelSemidirect(std::move(v), a.m_ * b.m_, a.level_);
}

HBSemidirect HBSemidirect::make(FieldElement x, FieldElement y, HBMatrix h, long level) {
  if (!in_inverse_different(x) || !in_order(y))
    throw Error(Errc::NotInLatticeGroup, "lattice part is not in D^-1 + O");
  if (!gamma_prime_n_check(h, level)) throw Error(Errc::NotInLatticeGroup, "group part is not in Gamma'(n)");
  return HBSemidirect(std::move(x), std::move(y), std::move(h), level);
}

HBSemidirect operator*(const HBSemidirect& a, const HBSemidirect& b) {
  if (a.level_ != b.level_) throw Error(Errc::DimensionMismatch, "semidirect elements of different level");
  const HBMatrix& h = a.h_;
  return HBSemidirect(a.x_ + h.a() * b.x_ + h.b() * b.y_, a.y_ + h.c() * b.x_ + h.d() * b.y_, a.h_ * b.h_,
                      a.level_);
}

SiegelSemidirect map_semidirect(const HBSemidirect& e) {
  return SiegelSemidirect::make(concat(coords_in_dual(e.x()), coords_in_basis(e.y())),
                                iota_bar(e.group()).matrix(), e.level());
}

}  // namespace hbsiegel
