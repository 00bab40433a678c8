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
#include "hbsiegel/poly.hpp"

#include <algorithm>

#include "hbsiegel/errors.hpp"

namespace hbsiegel {

RatPoly::RatPoly(RatVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
  RatVector v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval RatPoly::eval(const Interval& x) const {
  Interval acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

int RatPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  RatVector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  RatPoly m = *this;
  const Rational lc = leading();
  for (auto& c : m.coeffs_) c /= lc;
  return m;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RatVector out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(RatPoly a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

RatPoly operator-(RatPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  RatVector rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  RatVector quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

SturmSequence::SturmSequence(const RatPoly& p) {
  chain_.push_back(p);
  RatPoly d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (true) {
    RatPoly r = -(chain_[chain_.size() - 2] % chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(std::move(r));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(p.sign_at(x));
  return count_variations(s);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(p.is_zero() ? 0 : sgn(p.leading()));
  return count_variations(s);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    if (p.is_zero()) {
      s.push_back(0);
      continue;
    }
    const int lead = sgn(p.leading());
    s.push_back(p.degree() % 2 == 0 ? lead : -lead);
  }
  return count_variations(s);
}

Rational root_bound(const RatPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(i)) / p.leading())));
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

std::vector<Interval> isolate_real_roots(const RatPoly& p) {
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  const SturmSequence sturm(p);
  const Rational bound = root_bound(p);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  // Depth-first, left half first, so roots come out ascending.
  std::vector<Pending> stack;
  stack.push_back({-bound, bound, sturm.count_roots(-bound, bound)});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.emplace_back(cur.lo, cur.hi);
      continue;
    }
    const Rational span = cur.hi - cur.lo;
    Rational split = cur.lo + span / 2;
    for (unsigned j = 2; p.eval(split) == 0; ++j) {
      Rational step = 1;
      mpq_div_2exp(step.get_mpq_t(), step.get_mpq_t(), j);
      split = cur.lo + span * (Rational(1, 2) + step);
    }
    const int left = sturm.count_roots(cur.lo, split);
    stack.push_back({split, cur.hi, cur.count - left});
    stack.push_back({cur.lo, split, left});
  }
  return out;
}

Interval refine_root(const RatPoly& p, Interval iv, unsigned bits) {
  Rational target = 1;
  mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), bits);
  if (iv.width() == 0) return iv;
  const int sign_lo = p.sign_at(iv.lo);
  while (iv.width() > target) {
    Rational mid = iv.midpoint();
    const int s = p.sign_at(mid);
    if (s == 0) return Interval(mid);
    if (s == sign_lo)
      iv.lo = std::move(mid);
    else
      iv.hi = std::move(mid);
  }
  return iv;
}

}  // namespace hbsiegel
