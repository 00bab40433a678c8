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
#include "hbsiegel/symrep.hpp"

#include <algorithm>
#include <numeric>

#include "hbsiegel/errors.hpp"

namespace hbsiegel {

namespace {

using Poly = std::map<Exponents, Rational>;

void accumulate(Poly& p, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate(out, e, ca * cb);
    }
  return out;
}

}  // namespace

SymTensor::SymTensor(std::size_t genus, int degree, int twist)
    : genus_(genus), degree_(degree), twist_(twist) {
  if (genus < 1) throw Error(Errc::InvalidInput, "genus must be >= 1");
  if (degree < 0) throw Error(Errc::DegreeMismatch, "degree must be >= 0");
}

SymTensor SymTensor::monomial(std::size_t genus, Exponents alpha, Rational coeff, int twist) {
  const int k = std::accumulate(alpha.begin(), alpha.end(), 0);
  SymTensor t(genus, k, twist);
  t.add_term(alpha, coeff);
  return t;
}

Rational SymTensor::coeff(const Exponents& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymTensor::add_term(const Exponents& alpha, const Rational& c) {
  if (alpha.size() != variables()) throw Error(Errc::DegreeMismatch, "exponent vector has wrong length");
  if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; }))
    throw Error(Errc::DegreeMismatch, "negative exponent");
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != degree_)
    throw Error(Errc::DegreeMismatch, "monomial degree differs from tensor degree");
  accumulate(terms_, alpha, c);
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  if (o.genus_ != genus_ || o.degree_ != degree_) throw Error(Errc::DegreeMismatch, "adding tensors of different shape");
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

std::uint64_t sym_dim(std::size_t genus, int degree) {
  if (degree < 0) throw Error(Errc::DegreeMismatch, "degree must be >= 0");
  // binomial(n + k - 1, k) with n = 2g, built incrementally so every
  // intermediate value is itself a binomial coefficient.
  const std::uint64_t n = 2 * genus;
  std::uint64_t b = 1;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(degree); ++i) b = b * (n + i - 1) / i;
  return b;
}

std::vector<Exponents> monomials(std::size_t genus, int degree) {
  std::vector<Exponents> out;
  const std::size_t n = 2 * genus;
  Exponents e(n, 0);
  // Recursive fill: position i receives 0..remaining.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == n) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, remaining - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

SymTensor sym_action(const RatMatrix& m, const SymTensor& v) {
  const std::size_t n = v.variables();
  if (m.rows() != n || m.cols() != n) throw Error(Errc::DegreeMismatch, "matrix size differs from 2g");
  if (m.determinant() == 0) throw Error(Errc::SingularMatrix, "action by a singular matrix");
  // image[i] = sum_j m(j, i) x_j
  std::vector<Poly> image(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      accumulate(image[i], e, m(j, i));
    }
  // Cache powers of each image variable.
  std::vector<std::vector<Poly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Poly{{Exponents(n, 0), Rational(1)}});

  SymTensor out(v.genus(), v.degree(), v.twist());
  for (const auto& [alpha, c] : v.terms()) {
    Poly term{{Exponents(n, 0), c}};
    for (std::size_t i = 0; i < n; ++i) {
      while (powers[i].size() <= static_cast<std::size_t>(alpha[i]))
        powers[i].push_back(multiply(powers[i].back(), image[i]));
      if (alpha[i] > 0) term = multiply(term, powers[i][static_cast<std::size_t>(alpha[i])]);
    }
    for (const auto& [e, ce] : term) out.add_term(e, ce);
  }
  return out;
}

DualVector dual_action(const RatMatrix& m, const DualVector& phi) {
  if (m.rows() != phi.size()) throw Error(Errc::DimensionMismatch, "dual vector has wrong length");
  return m.inverse().transpose() * phi;
}

SymTensor contraction(const SymTensor& v, const DualVector& phi) {
  if (v.degree() < 1) throw Error(Errc::DegreeZero, "contraction of a degree-0 tensor");
  if (phi.size() != v.variables()) throw Error(Errc::DimensionMismatch, "dual vector has wrong length");
  SymTensor out(v.genus(), v.degree() - 1, v.twist());
  for (const auto& [alpha, c] : v.terms())
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0 || phi[i] == 0) continue;
      Exponents e = alpha;
      --e[i];
      out.add_term(e, c * alpha[i] * phi[i]);
    }
  return out;
}

SymTensor product_projection(const std::map<int, SymTensor>& components, std::size_t genus, int degree) {
  const auto it = components.find(degree);
  if (it == components.end()) return SymTensor(genus, degree);
  if (it->second.genus() != genus || it->second.degree() != degree)
    throw Error(Errc::DegreeMismatch, "component stored under the wrong degree");
  return it->second;
}

ObstructionReport parity_obstruction(const std::vector<long>& weights, std::size_t r) {
  if (r < 1 || weights.size() != 2 * r) throw Error(Errc::WrongLength, "expected 2r weights with r >= 1");
  ObstructionReport rep;
  for (long w : weights) rep.doubled_weights.push_back(2 * w);
  rep.required_weights.assign(2 * r, 1);
  std::vector<long> lhs = rep.doubled_weights;
  std::sort(lhs.begin(), lhs.end());
  rep.contradiction = lhs != rep.required_weights;
  return rep;
}

}  // namespace hbsiegel
