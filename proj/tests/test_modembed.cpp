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
#include <gtest/gtest.h>

#include "fields.hpp"
#include "hbsiegel/modembed.hpp"
#include "hbsiegel/sampling.hpp"

namespace hbsiegel {
namespace {

using testing::q;
using testing::rm;

HBMatrix unipotent_upper(const FieldElement& b) {
  const NumberField& nf = b.field();
  return HBMatrix(nf.one(), b, nf.zero(), nf.one());
}

TEST(ModEmbed, EmbeddingDataExamples) {
  const EmbeddingData q1 = compute_embedding_data(testing::rationals(), 32);
  EXPECT_TRUE(q1.r(0, 0).contains(1) && q1.r(0, 0).width() == 0);
  EXPECT_TRUE(q1.rstar(0, 0).contains(1) && q1.rstar(0, 0).width() == 0);

  const EmbeddingData ed = compute_embedding_data(testing::golden(), 40);
  // Row j of R holds sigma_j(e_k); roots ascending.
  EXPECT_TRUE(ed.r(0, 0).contains(1));
  EXPECT_TRUE(ed.r(1, 0).contains(1));
  EXPECT_NEAR(ed.r(0, 1).midpoint().get_d(), -0.6180339887498949, 1e-9);
  EXPECT_NEAR(ed.r(1, 1).midpoint().get_d(), 1.6180339887498949, 1e-9);
  EXPECT_TRUE(ed.certified());
  EXPECT_TRUE(encloses(ed.gram_product(), testing::golden().gram()));
}

TEST(ModEmbed, IntervalDualityAllFields) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    const EmbeddingData ed = compute_embedding_data(nf, 64);
    EXPECT_TRUE(ed.certified()) << name;
    EXPECT_TRUE(encloses(ed.gram_product(), nf.gram())) << name;
  }
}

TEST(ModEmbed, IotaBarExamples) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    const GSpElement id = iota_bar(HBMatrix::identity(nf));
    EXPECT_EQ(id.matrix(), RatMatrix::identity(2 * nf.degree())) << name;
    EXPECT_EQ(id.nu(), 1) << name;
    const FieldElement s = nf.from_rational(q("-7/3"));
    const GSpElement sc = iota_bar(HBMatrix(s, nf.zero(), nf.zero(), s));
    EXPECT_EQ(sc.matrix(), RatMatrix::identity(2 * nf.degree()) * q("-7/3")) << name;
    EXPECT_EQ(sc.nu(), q("49/9")) << name;
  }
  const NumberField nf = testing::golden();
  const GSpElement t = iota_bar(unipotent_upper(nf.dual_basis()[0]));
  EXPECT_EQ(t.matrix(), rm({{"1", "0", "1", "0"}, {"0", "1", "0", "1"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}));
  EXPECT_ERRC(iota_bar(HBMatrix(nf.theta(), nf.zero(), nf.zero(), nf.one())), Errc::NotInGPrime);
}

TEST(ModEmbed, IotaBarEnclosedByConjugation) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    const EmbeddingData ed = compute_embedding_data(nf, 80);
    for (std::uint64_t t = 0; t < 25; ++t) {
      Rng rng(trial_seed(301, t));
      const HBMatrix h = random_g_prime(nf, rng);
      EXPECT_TRUE(encloses(iota_bar_enclosure(ed, h), iota_bar(h).matrix())) << name << " trial " << t;
    }
  }
}

TEST(ModEmbed, IotaBarHomomorphism) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t t = 0; t < 40; ++t) {
      Rng rng(trial_seed(302, t));
      const HBMatrix a = random_g_prime(nf, rng);
      const HBMatrix b = random_g_prime(nf, rng);
      const GSpElement ia = iota_bar(a);
      EXPECT_EQ(iota_bar(a * b), ia * iota_bar(b)) << name;
      EXPECT_EQ(ia.nu(), a.det().rational_value()) << name;
      EXPECT_EQ(iota_bar(a.inverse()), ia.inverse()) << name;
    }
  }
}

TEST(ModEmbed, SlDmOMapsToIntegralSymplectic) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t t = 0; t < 40; ++t) {
      Rng rng(trial_seed(303, t));
      const GSpElement m = iota_bar(random_sl_dmo(nf, rng));
      EXPECT_TRUE(is_integral(m.matrix())) << name;
      EXPECT_EQ(m.nu(), 1) << name;
      EXPECT_TRUE(gamma_n_check(iota_bar(random_gamma_prime(nf, 4, rng)).matrix(), 4)) << name;
    }
  }
}

TEST(ModEmbed, IotaPointExamples) {
  const NumberField nf = testing::golden();
  const SiegelPoint z = iota_point(HBPoint::make(nf.zero(), nf.one()));
  EXPECT_EQ(z.re(), RatMatrix(2, 2));
  EXPECT_EQ(z.im(), rm({{"2", "1"}, {"1", "3"}}));
  const NumberField r2 = testing::sqrt2();
  EXPECT_EQ(iota_point(HBPoint::make(r2.zero(), r2.one())).im(), rm({{"2", "0"}, {"0", "4"}}));
  const NumberField ql = testing::rationals();
  const SiegelPoint w = iota_point(HBPoint::make(ql.from_rational(q("2/3")), ql.from_rational(q("5"))));
  EXPECT_EQ(w.re(), rm({{"2/3"}}));
  EXPECT_EQ(w.im(), rm({{"5"}}));
  EXPECT_ERRC(iota_point(HBPoint::make(nf.zero(), -nf.one(), Orientation::Lower)), Errc::NotUpperHalf);
}

TEST(ModEmbed, HBPointValidation) {
  const NumberField nf = testing::golden();
  EXPECT_ERRC(HBPoint::make(nf.zero(), nf.theta()), Errc::NotUpperHalf);
  EXPECT_ERRC(HBPoint::make(nf.zero(), nf.zero()), Errc::NotUpperHalf);
  EXPECT_ERRC(HBPoint::make(nf.zero(), nf.one(), Orientation::Lower), Errc::NotUpperHalf);
  EXPECT_NO_THROW(HBPoint::make(nf.zero(), nf.theta() * nf.theta()));
  EXPECT_ERRC(SiegelPoint::make(rm({{"0", "1"}, {"0", "0"}}), RatMatrix::identity(2)), Errc::NotUpperHalf);
  EXPECT_ERRC(SiegelPoint::make(RatMatrix(2, 2), rm({{"1", "2"}, {"2", "1"}})), Errc::NotUpperHalf);
}

TEST(ModEmbed, IotaPointMatchesEmbeddedDiagonal) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    const EmbeddingData ed = compute_embedding_data(nf, 80);
    for (std::uint64_t t = 0; t < 20; ++t) {
      Rng rng(trial_seed(304, t));
      const HBPoint tau = random_upper_point(nf, rng);
      const SiegelPoint z = iota_point(tau);
      EXPECT_TRUE(encloses(ed.r.transpose() * embedded_diagonal(ed, tau.re()) * ed.r, z.re())) << name;
      EXPECT_TRUE(encloses(ed.r.transpose() * embedded_diagonal(ed, tau.im()) * ed.r, z.im())) << name;
    }
  }
}

TEST(ModEmbed, HalfSpacePreserved) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t t = 0; t < 40; ++t) {
      Rng rng(trial_seed(305, t));
      const SiegelPoint z = iota_point(random_upper_point(nf, rng));
      EXPECT_TRUE(z.re().is_symmetric()) << name;
      EXPECT_TRUE(z.im().is_symmetric()) << name;
      EXPECT_TRUE(is_positive_definite(z.im())) << name;
    }
  }
}

TEST(ModEmbed, HBActionExamples) {
  const NumberField nf = testing::golden();
  const HBPoint tau = HBPoint::make(nf.from_rational(q("1/2")), nf.theta() * nf.theta());
  EXPECT_EQ(hb_action(HBMatrix::identity(nf), tau), tau);
  const FieldElement b = nf.dual_basis()[1];
  const HBPoint moved = hb_action(unipotent_upper(b), tau);
  EXPECT_EQ(moved.re(), tau.re() + b);
  EXPECT_EQ(moved.im(), tau.im());

  const NumberField ql = testing::rationals();
  const HBPoint i = HBPoint::make(ql.zero(), ql.one());
  EXPECT_EQ(hb_action(HBMatrix(ql.zero(), ql.one(), -ql.one(), ql.zero()), i), i);
  EXPECT_ERRC(hb_action(HBMatrix(nf.theta(), nf.zero(), nf.zero(), nf.one()), tau), Errc::InvalidAction);
  EXPECT_ERRC(hb_action(HBMatrix(-nf.one(), nf.zero(), nf.zero(), nf.one()), tau), Errc::InvalidAction);
}

TEST(ModEmbed, HBActionIsAnAction) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t t = 0; t < 20; ++t) {
      Rng rng(trial_seed(306, t));
      const HBMatrix a = random_sl_dmo(nf, rng);
      const HBMatrix b = random_sl_dmo(nf, rng);
      const HBPoint tau = random_upper_point(nf, rng);
      EXPECT_EQ(hb_action(a * b, tau), hb_action(a, hb_action(b, tau))) << name;
    }
  }
}

TEST(ModEmbed, SiegelActionExamples) {
  const SiegelPoint i2 = SiegelPoint::make(RatMatrix(2, 2), RatMatrix::identity(2));
  EXPECT_EQ(siegel_action(GSpElement(RatMatrix::identity(4)), i2), i2);
  EXPECT_EQ(siegel_action(GSpElement(standard_form(2)), i2), i2);
  RatMatrix tr = RatMatrix::identity(4);
  const RatMatrix bsym = rm({{"1", "2"}, {"2", "-3"}});
  tr.set_block(0, 2, bsym);
  const SiegelPoint moved = siegel_action(GSpElement(tr), i2);
  EXPECT_EQ(moved.re(), bsym);
  EXPECT_EQ(moved.im(), RatMatrix::identity(2));
  // Negative similitude swaps the half-spaces.
  RatMatrix flip = RatMatrix::identity(4);
  flip(0, 0) = -1;
  flip(1, 1) = -1;
  EXPECT_EQ(siegel_action(GSpElement(flip), i2).orientation(), Orientation::Lower);
}

TEST(ModEmbed, EquivarianceExamples) {
  const NumberField nf = testing::golden();
  const HBPoint i1 = HBPoint::make(nf.zero(), nf.one());
  EXPECT_TRUE(check_equivariance(HBMatrix::identity(nf), i1));
  const HBMatrix h = unipotent_upper(nf.dual_basis()[0]);
  EXPECT_TRUE(check_equivariance(h, i1));
  // Both sides by hand: i * gram + the identity shift.
  const SiegelPoint lhs = iota_point(hb_action(h, i1));
  EXPECT_EQ(lhs.re(), RatMatrix::identity(2));
  EXPECT_EQ(lhs.im(), nf.gram());
  const SiegelPoint rhs = siegel_action(iota_bar(h), iota_point(i1));
  EXPECT_EQ(lhs, rhs);
}

TEST(ModEmbed, EquivarianceRandom) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) {
    for (std::uint64_t t = 0; t < 40; ++t) {
      Rng rng(trial_seed(307, t));
      HBMatrix h = random_g_prime(nf, rng);
      if (h.det().rational_value() < 0) h = h * HBMatrix(-nf.one(), nf.zero(), nf.zero(), nf.one());
      const HBPoint tau = random_upper_point(nf, rng);
      EXPECT_TRUE(check_equivariance(h, tau)) << name << " trial " << t;
      EXPECT_TRUE(check_equivariance(random_sl_dmo(nf, rng), tau)) << name << " trial " << t;
    }
  }
}

TEST(ModEmbed, SymplecticCompat) {
  for (const auto& [name, nf] : testing::test_fields_with_q()) EXPECT_TRUE(check_symplectic_compat(nf)) << name;
}

TEST(ModEmbed, FieldComplexInverse) {
  const NumberField nf = testing::cubic49();
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng(trial_seed(308, t));
    const FieldComplex z(random_element(nf, rng, 4, 3), random_totally_positive(nf, rng));
    const FieldComplex w = z * z.inverse();
    EXPECT_EQ(w.re(), nf.one());
    EXPECT_TRUE(w.im().is_zero());
  }
  EXPECT_ERRC(FieldComplex(nf.zero()).inverse(), Errc::DivisionByZero);
}

}  // namespace
}  // namespace hbsiegel
