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
#include "hbsiegel/sampling.hpp"

#include <limits>

#include "hbsiegel/errors.hpp"

namespace hbsiegel {

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw Error(Errc::InvalidInput, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<long>(r % span);
}

Rational Rng::rational(long num_bound, long den_bound) {
  return ratio(uniform(-num_bound, num_bound), uniform(1, den_bound));
}

FieldElement random_element(const NumberField& nf, Rng& rng, long num_bound, long den_bound) {
  RatVector v(nf.degree());
  for (auto& c : v) c = rng.rational(num_bound, den_bound);
  return nf.element(std::move(v));
}

FieldElement random_lattice_element(const std::vector<FieldElement>& basis, Rng& rng, long bound) {
  FieldElement x = basis.front() * Rational(0);
  for (const auto& e : basis) x += e * Rational(rng.uniform(-bound, bound));
  return x;
}

FieldElement random_totally_positive(const NumberField& nf, Rng& rng) {
  // q + y1^2 + y2^2 with q > 0 is positive at every real embedding.
  const FieldElement y1 = random_element(nf, rng, 2, 2);
  const FieldElement y2 = random_element(nf, rng, 2, 3);
  return nf.from_rational(ratio(rng.uniform(1, 4), rng.uniform(1, 3))) + y1 * y1 + y2 * y2;
}

HBPoint random_upper_point(const NumberField& nf, Rng& rng) {
  return HBPoint::make(random_element(nf, rng, 3, 4), random_totally_positive(nf, rng));
}

namespace {

HBMatrix unipotent_word(const NumberField& nf, Rng& rng, std::size_t max_len,
                        const std::vector<FieldElement>& upper_basis,
                        const std::vector<FieldElement>& lower_basis) {
  HBMatrix h = HBMatrix::identity(nf);
  const std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i) {
    if (rng.uniform(0, 1) == 0)
      h = h * HBMatrix(nf.one(), random_lattice_element(upper_basis, rng, 2), nf.zero(), nf.one());
    else
      h = h * HBMatrix(nf.one(), nf.zero(), random_lattice_element(lower_basis, rng, 2), nf.one());
  }
  return h;
}

std::vector<FieldElement> scaled(std::vector<FieldElement> v, long n) {
  for (auto& x : v) x *= Rational(n);
  return v;
}

RatMatrix block_unipotent(const RatMatrix& s, bool upper) {
  const std::size_t g = s.rows();
  RatMatrix m = RatMatrix::identity(2 * g);
  m.set_block(upper ? 0 : g, upper ? g : 0, s);
  return m;
}

RatMatrix random_symmetric(std::size_t g, Rng& rng, long num_bound, long den_bound) {
  RatMatrix s(g, g);
  for (std::size_t r = 0; r < g; ++r)
    for (std::size_t c = r; c < g; ++c) s(r, c) = s(c, r) = rng.rational(num_bound, den_bound);
  return s;
}

}  // namespace

HBMatrix random_sl_dmo(const NumberField& nf, Rng& rng, std::size_t max_len) {
  return unipotent_word(nf, rng, max_len, nf.dual_basis(), nf.different_basis());
}

HBMatrix random_gamma_prime(const NumberField& nf, long level, Rng& rng, std::size_t max_len) {
  return unipotent_word(nf, rng, max_len, scaled(nf.dual_basis(), level), scaled(nf.different_basis(), level));
}

HBMatrix random_g_prime(const NumberField& nf, Rng& rng, std::size_t max_len) {
  HBMatrix h = HBMatrix::identity(nf);
  const std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i) {
    switch (rng.uniform(0, 3)) {
      case 0:
        h = h * HBMatrix(nf.one(), random_element(nf, rng, 3, 3), nf.zero(), nf.one());
        break;
      case 1:
        h = h * HBMatrix(nf.one(), nf.zero(), random_element(nf, rng, 3, 3), nf.one());
        break;
      case 2: {
        Rational q = rng.rational(4, 3);
        if (q == 0) q = -1;
        h = h * HBMatrix(nf.from_rational(q), nf.zero(), nf.zero(), nf.one());
        break;
      }
      default: {
        // 1 + y^2 is totally positive, hence a unit of F.
        const FieldElement y = random_element(nf, rng, 2, 2);
        const FieldElement u = nf.one() + y * y;
        h = h * HBMatrix(u, nf.zero(), nf.zero(), u.inverse());
      }
    }
  }
  return h;
}

RatMatrix random_gamma_n(std::size_t genus, long level, Rng& rng, std::size_t max_len) {
  RatMatrix m = RatMatrix::identity(2 * genus);
  const std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i) {
    const RatMatrix s = random_symmetric(genus, rng, 2, 1) * Rational(level);
    m = m * block_unipotent(s, rng.uniform(0, 1) == 0);
  }
  return m;
}

RatMatrix random_gsp(std::size_t genus, Rng& rng, std::size_t max_len) {
  RatMatrix m = RatMatrix::identity(2 * genus);
  const std::size_t len = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i) {
    const long kind = rng.uniform(0, 2);
    if (kind < 2) {
      m = m * block_unipotent(random_symmetric(genus, rng, 3, 2), kind == 0);
    } else {
      Rational l = rng.rational(5, 3);
      if (l == 0) l = 2;
      RatMatrix d = RatMatrix::identity(2 * genus);
      for (std::size_t j = 0; j < genus; ++j) d(j, j) = l;
      m = m * d;
    }
  }
  return m;
}

RatMatrix random_invertible(std::size_t dim, Rng& rng, long bound) {
  while (true) {
    RatMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = Rational(rng.uniform(-bound, bound));
    if (m.determinant() != 0) return m;
  }
}

SymTensor random_tensor(std::size_t genus, int degree, Rng& rng, std::size_t terms) {
  SymTensor t(genus, degree, static_cast<int>(rng.uniform(-2, 2)));
  const std::size_t n = 2 * genus;
  for (std::size_t i = 0; i < terms; ++i) {
    Exponents e(n, 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))];
    t.add_term(e, rng.rational(5, 3));
  }
  return t;
}

DualVector random_dual(std::size_t dim, Rng& rng) {
  DualVector phi(dim);
  for (auto& c : phi) c = rng.rational(4, 2);
  return phi;
}

HBTorsionPoint random_hb_torsion(const NumberField& nf, long level, Rng& rng) {
  const FieldElement x = random_lattice_element(nf.dual_basis(), rng, level) * Rational(1, level);
  const FieldElement y = random_lattice_element(nf.basis(), rng, level) * Rational(1, level);
  return HBTorsionPoint::make(x, y, level);
}

}  // namespace hbsiegel
