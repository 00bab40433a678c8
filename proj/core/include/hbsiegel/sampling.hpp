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
#ifndef HBSIEGEL_SAMPLING_HPP
#define HBSIEGEL_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "hbsiegel/matrix.hpp"
#include "hbsiegel/modembed.hpp"
#include "hbsiegel/numfield.hpp"
#include "hbsiegel/symplectic.hpp"
#include "hbsiegel/symrep.hpp"
#include "hbsiegel/torsion.hpp"

namespace hbsiegel {

// Seeded generators for property tests and the CLI suites. Group elements
// are words in elementary unipotents, so membership holds by construction:
//   SL(D^-1 + O): [[1, b], [0, 1]], b in D^-1;  [[1, 0], [c, 1]], c in D
//   Gamma'(n):    the same with b in nD^-1, c in nD
//   G'(Q):        unipotents over F, diag(q, 1) with q in Q^x, diag(u, 1/u)
//   Gamma(n):     [[I, nS], [0, I]], [[I, 0], [nS, I]], S integral symmetric
//   GSp(2g, Q):   the same with S rational, and diag(l I, I)

/// Per-trial seed derived from a base seed (splitmix64 finalizer).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], independent of the standard library's
  /// distribution implementation.
  long uniform(long lo, long hi);
  Rational rational(long num_bound, long den_bound);

 private:
  std::mt19937_64 engine_;
};

FieldElement random_element(const NumberField& nf, Rng& rng, long num_bound = 3, long den_bound = 1);
/// Random Z-combination of the given basis with coefficients in [-bound, bound].
FieldElement random_lattice_element(const std::vector<FieldElement>& basis, Rng& rng, long bound);
FieldElement random_totally_positive(const NumberField& nf, Rng& rng);
HBPoint random_upper_point(const NumberField& nf, Rng& rng);

HBMatrix random_sl_dmo(const NumberField& nf, Rng& rng, std::size_t max_len = 12);
HBMatrix random_gamma_prime(const NumberField& nf, long level, Rng& rng, std::size_t max_len = 12);
HBMatrix random_g_prime(const NumberField& nf, Rng& rng, std::size_t max_len = 6);

RatMatrix random_gamma_n(std::size_t genus, long level, Rng& rng, std::size_t max_len = 8);
RatMatrix random_gsp(std::size_t genus, Rng& rng, std::size_t max_len = 6);
RatMatrix random_invertible(std::size_t dim, Rng& rng, long bound = 3);

SymTensor random_tensor(std::size_t genus, int degree, Rng& rng, std::size_t terms = 4);
DualVector random_dual(std::size_t dim, Rng& rng);

/// Random n-torsion point (x, y) of D^-1 + O.
HBTorsionPoint random_hb_torsion(const NumberField& nf, long level, Rng& rng);

}  // namespace hbsiegel

#endif  // HBSIEGEL_SAMPLING_HPP
