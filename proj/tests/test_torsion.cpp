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
#include <set>

#include <gtest/gtest.h>

#include "fields.hpp"
#include "hbsiegel/modembed.hpp"
#include "hbsiegel/sampling.hpp"
#include "hbsiegel/torsion.hpp"

namespace hbsiegel {
namespace {

using testing::q;
using testing::rv;

std::vector<GaussRational> minus(std::vector<GaussRational> a, const std::vector<GaussRational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
  return a;
}

TEST(Torsion, EnumerationCounts) {
  std::size_t count = 0;
  for (const auto& v : enumerate_torsion(1, 2)) {
    EXPECT_TRUE(v.is_zero());
    ++count;
  }
  EXPECT_EQ(count, 1u);
  EXPECT_EQ(enumerate_torsion(2, 1).size(), 4u);
  std::set<TorsionPoint> seen;
  for (const auto& v : enumerate_torsion(3, 2)) seen.insert(v);
  EXPECT_EQ(seen.size(), 81u);
  EXPECT_EQ(enumerate_torsion(3, 3).size(), 729u);
  EXPECT_ERRC(enumerate_torsion(0, 2), Errc::InvalidTorsion);
}

TEST(Torsion, PointReductionAndOrder) {
  const TorsionPoint v(rv({"4/3", "-1/3"}), 3);
  EXPECT_EQ(v.coords(), rv({"1/3", "2/3"}));
  EXPECT_EQ(v.order(), 3);
  EXPECT_EQ(TorsionPoint(rv({"1/2", "1/3"}), 6).order(), 6);
  EXPECT_EQ(TorsionPoint(rv({"1", "-2"}), 5).order(), 1);
  EXPECT_TRUE(TorsionPoint(rv({"1", "-2"}), 5).is_zero());
  EXPECT_ERRC(TorsionPoint(rv({"1/2", "0"}), 3), Errc::InvalidTorsion);
  EXPECT_ERRC(TorsionPoint(rv({"0", "0"}), 0), Errc::InvalidTorsion);
  EXPECT_EQ(v + v + v, TorsionPoint(rv({"0", "0"}), 3));
}

TEST(Torsion, TransportExamples) {
  const NumberField nf = testing::golden();
  const HBTorsionPoint zero = HBTorsionPoint::make(nf.zero(), nf.zero(), 3);
  EXPECT_TRUE(transport(zero).is_zero());
  const HBTorsionPoint a = HBTorsionPoint::make(nf.dual_basis()[0] * q("1/3"), nf.zero(), 3);
  EXPECT_EQ(transport(a).coords(), rv({"1/3", "0", "0", "0"}));
  const HBTorsionPoint b = HBTorsionPoint::make(nf.zero(), nf.theta() * q("1/3"), 3);
  EXPECT_EQ(transport(b).coords(), rv({"0", "0", "0", "1/3"}));
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ(zero.order(), 1);
  EXPECT_ERRC(HBTorsionPoint::make(nf.dual_basis()[0] * q("1/2"), nf.zero(), 3), Errc::InvalidTorsion);
  EXPECT_ERRC(HBTorsionPoint::make(nf.zero(), nf.dual_basis()[0] * q("1/3"), 3), Errc::InvalidTorsion);
}

TEST(Torsion, HBPointsAreReduced) {
  const NumberField nf = testing::golden();
  const FieldElement x = nf.dual_basis()[0] * q("4/3") - nf.dual_basis()[1] * Rational(2);
  const HBTorsionPoint t = HBTorsionPoint::make(x, nf.one() * q("-1/3"), 3);
  EXPECT_EQ(coords_in_dual(t.x()), rv({"1/3", "0"}));
  EXPECT_EQ(coords_in_basis(t.y()), rv({"2/3", "0"}));
}

TEST(Torsion, TransportIsBijectiveAtLevelTwoAndThree) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (long n : {2L, 3L}) {
      const auto hb = enumerate_hb_torsion(nf, n);
      std::set<TorsionPoint> images;
      for (const auto& t : hb) {
        const TorsionPoint v = transport(t);
        EXPECT_EQ(v.order(), t.order()) << name;
        images.insert(v);
      }
      std::set<TorsionPoint> all;
      for (const auto& v : enumerate_torsion(n, nf.degree())) all.insert(v);
      EXPECT_EQ(hb.size(), all.size()) << name;
      EXPECT_EQ(images, all) << name;
    }
  }
}

TEST(Torsion, TransportIsAdditive) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t t = 0; t < 40; ++t) {
      Rng rng(trial_seed(401, t));
      const long n = rng.uniform(2, 7);
      const HBTorsionPoint a = random_hb_torsion(nf, n, rng);
      const HBTorsionPoint b = random_hb_torsion(nf, n, rng);
      EXPECT_EQ(transport(a + b), transport(a) + transport(b)) << name;
      EXPECT_EQ(transport(a).order(), a.order()) << name;
    }
  }
}

TEST(Torsion, SectionValueExamples) {
  const SiegelPoint i1 = SiegelPoint::make(testing::rm({{"0"}}), testing::rm({{"1"}}));
  EXPECT_EQ(section_value(TorsionPoint(rv({"0", "0"}), 3), i1), (std::vector<GaussRational>{GaussRational()}));
  EXPECT_EQ(section_value(TorsionPoint(rv({"1/3", "0"}), 3), i1),
            (std::vector<GaussRational>{GaussRational(q("1/3"), 0)}));
  EXPECT_EQ(section_value(TorsionPoint(rv({"0", "1/3"}), 3), i1),
            (std::vector<GaussRational>{GaussRational(0, q("1/3"))}));
}

TEST(Torsion, FiberLatticeMembership) {
  const SiegelPoint tau = SiegelPoint::make(testing::rm({{"1/2", "1"}, {"1", "0"}}), testing::rm({{"2", "1"}, {"1", "3"}}));
  // p + tau q for integral p, q.
  const RatVector p = rv({"3", "-1"}), qq = rv({"2", "5"});
  std::vector<GaussRational> w(2);
  for (std::size_t j = 0; j < 2; ++j) {
    w[j] = GaussRational(p[j], 0);
    for (std::size_t k = 0; k < 2; ++k) w[j] = w[j] + GaussRational(tau.re()(j, k) * qq[k], tau.im()(j, k) * qq[k]);
  }
  EXPECT_TRUE(in_fiber_lattice(w, tau));
  w[0] = w[0] + GaussRational(q("1/2"), 0);
  EXPECT_FALSE(in_fiber_lattice(w, tau));
}

TEST(Torsion, CartesianExamples) {
  const NumberField nf = testing::golden();
  const HBPoint i1 = HBPoint::make(nf.zero(), nf.one());
  EXPECT_TRUE(check_cartesian_transport(HBTorsionPoint::make(nf.zero(), nf.zero(), 3), i1));
  const HBTorsionPoint a = HBTorsionPoint::make(nf.dual_basis()[0] * q("1/3"), nf.zero(), 3);
  EXPECT_TRUE(check_cartesian_transport(a, i1));
  const auto lhs = hb_section_value(a.x(), a.y(), i1);
  EXPECT_EQ(lhs, (std::vector<GaussRational>{GaussRational(q("1/3"), 0), GaussRational()}));
}

TEST(Torsion, CartesianWithLatticeShifts) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t t = 0; t < 30; ++t) {
      Rng rng(trial_seed(402, t));
      const HBTorsionPoint p = random_hb_torsion(nf, 3, rng);
      const HBPoint tau = random_upper_point(nf, rng);
      const SiegelPoint z = iota_point(tau);
      const FieldElement l1 = random_lattice_element(nf.dual_basis(), rng, 4);
      const FieldElement l2 = random_lattice_element(nf.basis(), rng, 4);
      const auto shifted = hb_section_value(p.x() + l1, p.y() + l2, tau);
      EXPECT_TRUE(in_fiber_lattice(minus(shifted, section_value(transport(p), z)), z)) << name;
      EXPECT_TRUE(check_cartesian_transport(p, tau)) << name;
      // A different torsion point lands in a different fiber class.
      const HBTorsionPoint other = random_hb_torsion(nf, 3, rng);
      if (!(transport(other) == transport(p)))
        EXPECT_FALSE(in_fiber_lattice(minus(shifted, section_value(transport(other), z)), z)) << name;
    }
  }
}

TEST(Torsion, LatticeEquivarianceExamples) {
  const NumberField nf = testing::golden();
  const HBTorsionPoint t = HBTorsionPoint::make(nf.dual_basis()[1] * q("2/3"), nf.theta() * q("1/3"), 3);
  EXPECT_TRUE(lattice_equivariance(t, HBMatrix::identity(nf)));
  EXPECT_ERRC(lattice_equivariance(t, HBMatrix(nf.from_rational(2), nf.zero(), nf.zero(), nf.one())),
              Errc::NotInLatticeGroup);
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng(trial_seed(403, k));
    const HBMatrix g = random_gamma_prime(nf, 3, rng);
    EXPECT_EQ(act(g, t), t);
    EXPECT_TRUE(lattice_equivariance(t, g));
  }
}

TEST(Torsion, LatticeEquivarianceRandom) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t k = 0; k < 40; ++k) {
      Rng rng(trial_seed(404, k));
      const long n = rng.uniform(2, 6);
      const HBTorsionPoint t = random_hb_torsion(nf, n, rng);
      const HBMatrix h = random_sl_dmo(nf, rng);
      EXPECT_TRUE(lattice_equivariance(t, h)) << name;
      EXPECT_EQ(act(h * h.inverse(), t), t) << name;
    }
  }
}

TEST(Torsion, GammaNActsTriviallyOnTorsion) {
  for (std::uint64_t k = 0; k < 30; ++k) {
    Rng rng(trial_seed(405, k));
    const RatMatrix m = random_gamma_n(2, 3, rng);
    for (const auto& v : enumerate_torsion(3, 2))
      if (!(act(m, v) == v)) ADD_FAILURE();
  }
}

TEST(Torsion, SemidirectLaws) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t k = 0; k < 15; ++k) {
      Rng rng(trial_seed(406, k));
      auto draw = [&] {
        return HBSemidirect::make(random_lattice_element(nf.dual_basis(), rng, 3),
                                  random_lattice_element(nf.basis(), rng, 3), random_gamma_prime(nf, 3, rng), 3);
      };
      const HBSemidirect a = draw(), b = draw(), c = draw();
      EXPECT_EQ((a * b) * c, a * (b * c)) << name;
      EXPECT_EQ(map_semidirect(a * b), map_semidirect(a) * map_semidirect(b)) << name;
    }
  }
  const NumberField nf = testing::golden();
  EXPECT_ERRC(HBSemidirect::make(nf.dual_basis()[0], nf.zero(),
                                 HBMatrix(nf.one(), nf.dual_basis()[0], nf.zero(), nf.one()), 3),
              Errc::NotInLatticeGroup);
  EXPECT_ERRC(HBSemidirect::make(nf.zero(), nf.dual_basis()[0], HBMatrix::identity(nf), 3),
              Errc::NotInLatticeGroup);
  EXPECT_ERRC(SiegelSemidirect::make(rv({"1/2", "0"}), RatMatrix::identity(2), 3), Errc::NotInLatticeGroup);
  const SiegelSemidirect s1 = SiegelSemidirect::make(rv({"1", "0"}), testing::rm({{"1", "3"}, {"0", "1"}}), 3);
  const SiegelSemidirect s2 = SiegelSemidirect::make(rv({"0", "1"}), RatMatrix::identity(2), 3);
  // (v1, g1)(v2, g2) = (v1 + g1 v2, g1 g2).
  EXPECT_EQ((s1 * s2).lattice(), rv({"4", "1"}));
}

}  // namespace
}  // namespace hbsiegel
