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
#include "hbsiegel/lattice.hpp"

#include <utility>

#include "hbsiegel/errors.hpp"

namespace hbsiegel {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[target] -= q * row[src]
void axpy_row(IntMatrix& m, std::size_t target, std::size_t src, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= q * m(src, c);
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid on the column below pivot_row until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r)
        if (m(r, col) != 0 && (best == rows || abs(m(r, col)) < abs(m(best, col)))) best = r;
      if (best == rows) break;
      swap_rows(m, pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m(r, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, col).get_mpz_t(), m(pivot_row, col).get_mpz_t());
        axpy_row(m, r, pivot_row, q);
        if (m(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (m(pivot_row, col) == 0) continue;
    if (m(pivot_row, col) < 0)
      for (std::size_t c = 0; c < cols; ++c) m(pivot_row, c) = -m(pivot_row, c);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(r, col).get_mpz_t(), m(pivot_row, col).get_mpz_t());
      axpy_row(m, r, pivot_row, q);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  return m.block(0, 0, pivot_row, cols);
}

std::vector<RatVector> zspan_basis(const std::vector<RatVector>& generators) {
  if (generators.empty()) return {};
  const std::size_t dim = generators.front().size();
  Integer scale = 1;
  for (const auto& v : generators) {
    if (v.size() != dim) throw Error(Errc::DimensionMismatch, "generators of unequal length");
    Integer l = lcm_of_denominators(v);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), l.get_mpz_t());
  }
  IntMatrix m(generators.size(), dim);
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      Rational scaled = generators[r][c] * scale;
      m(r, c) = scaled.get_num();
    }
  const IntMatrix h = hermite_normal_form(std::move(m));
  std::vector<RatVector> basis(h.rows(), RatVector(dim));
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < dim; ++c) basis[r][c] = ratio(h(r, c), scale);
  return basis;
}

}  // namespace hbsiegel
