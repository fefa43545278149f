/*
   Copyright 2026 The crepant authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "crepant/cyclotomic.hpp"
#include "crepant/error.hpp"
#include "crepant/rational.hpp"

namespace crepant {

enum class Var { q, psi, z };

inline std::string_view to_string(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::psi: return "psi";
    case Var::z: return "z";
  }
  return "?";
}

/// Power series c_0 + c_1 x + ... + c_N x^N + O(x^(N+1)) in the variable
/// `var`. Coefficients past the order are unknown, not zero: every binary
/// operation returns the smaller of the operand orders.
template <class R>
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(Var var, int order) : var_(var), c_(checked_size(order)) {}
  TruncSeries(Var var, std::vector<R> coeffs) : var_(var), c_(std::move(coeffs)) {
    if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "series needs at least one coefficient");
  }

  static TruncSeries constant(Var var, const R& value, int order) {
    TruncSeries s(var, order);
    s.c_[0] = value;
    return s;
  }
  static TruncSeries monomial(Var var, const R& coeff, int power, int order) {
    TruncSeries s(var, order);
    if (power <= order) s.c_[static_cast<std::size_t>(power)] = coeff;
    return s;
  }

  Var var() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  R& at(int n) { return c_[static_cast<std::size_t>(n)]; }

  /// First index with a nonzero coefficient, or order()+1 if none is known.
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<int>(i);
    return order() + 1;
  }
  bool is_zero() const { return valuation() > order(); }

  TruncSeries truncated(int order) const {
    if (order > this->order())
      throw Error(ErrorCode::InsufficientOrder,
                  "cannot extend series of order " + std::to_string(this->order()) + " to " + std::to_string(order));
    return TruncSeries(var_, std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  /// x^m * f, known through order() + m.
  TruncSeries shifted(int m) const {
    TruncSeries s(var_, order() + m);
    for (int i = 0; i <= order(); ++i) s.c_[static_cast<std::size_t>(i + m)] = c_[static_cast<std::size_t>(i)];
    return s;
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_var(o);
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    check_var(o);
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncSeries& operator*=(const R& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const R& s) { return a *= s; }
  friend TruncSeries operator*(const R& s, TruncSeries a) { return a *= s; }
  friend TruncSeries operator-(TruncSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_var(b);
    const int n = std::min(a.order(), b.order());
    TruncSeries r(a.var_, n);
    for (int i = 0; i <= n; ++i) {
      const R& ai = a.c_[static_cast<std::size_t>(i)];
      if (ai.is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        const R& bj = b.c_[static_cast<std::size_t>(j)];
        if (!bj.is_zero()) r.c_[static_cast<std::size_t>(i + j)] += ai * bj;
      }
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  /// Equality of the coefficients both operands know.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.var_ != b.var_) return false;
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }

  TruncSeries pow(int e) const {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "series pow: negative exponent");
    TruncSeries result = constant(var_, R(1), order());
    TruncSeries base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  void check_var(const TruncSeries& o) const {
    if (var_ != o.var_)
      throw Error(ErrorCode::InvalidArgument, std::string("series variable mismatch: ") +
                                                  std::string(to_string(var_)) + " vs " +
                                                  std::string(to_string(o.var_)));
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw Error(ErrorCode::InsufficientOrder, "negative series order");
    return static_cast<std::size_t>(order) + 1;
  }

  Var var_ = Var::q;
  std::vector<R> c_{R(0)};
};

using QSeries = TruncSeries<Rational>;
using CycSeries = TruncSeries<Cyclotomic5>;

/// x d/dx; the z variable is rejected.
template <class R>
TruncSeries<R> d_operator(const TruncSeries<R>& f) {
  if (f.var() == Var::z) throw Error(ErrorCode::InvalidArgument, "d_operator applied to a z-series");
  TruncSeries<R> r(f.var(), f.order());
  for (int n = 1; n <= f.order(); ++n) r.at(n) = f[n] * R(n);
  return r;
}

/// f / g. If g has valuation v > 0 then f must vanish to the same order and
/// the quotient is known through min(orders) - v.
template <class R>
TruncSeries<R> series_div(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  f.check_var(g);
  const int v = g.valuation();
  if (v > g.order()) throw Error(ErrorCode::NonInvertible, "series division by a series that vanishes to its order");
  for (int i = 0; i < v && i <= f.order(); ++i)
    if (!f[i].is_zero())
      throw Error(ErrorCode::NonInvertible,
                  "series division: numerator has lower valuation than denominator (" + std::to_string(i) +
                      " < " + std::to_string(v) + ")");
  const int n = std::min(f.order(), g.order()) - v;
  if (n < 0) throw Error(ErrorCode::InsufficientOrder, "series division leaves no known coefficients");
  const R lead_inv = inv(g[v]);
  TruncSeries<R> r(f.var(), n);
  for (int k = 0; k <= n; ++k) {
    R acc = f[k + v];
    for (int j = 1; j <= k; ++j) {
      const R& gj = g[v + j];
      if (!gj.is_zero()) acc -= gj * r[k - j];
    }
    r.at(k) = acc * lead_inv;
  }
  return r;
}

/// exp(f) for f with zero constant term, via n r_n = sum_j j f_j r_{n-j}.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& f) {
  if (!f[0].is_zero()) throw Error(ErrorCode::InvalidArgument, "series_exp: nonzero constant term");
  TruncSeries<R> r(f.var(), f.order());
  r.at(0) = R(1);
  for (int n = 1; n <= f.order(); ++n) {
    R acc(0);
    for (int j = 1; j <= n; ++j)
      if (!f[j].is_zero()) acc += R(j) * f[j] * r[n - j];
    r.at(n) = acc * inv(R(n));
  }
  return r;
}

/// Coefficientwise embedding Q -> Q(zeta5).
inline CycSeries lift(const QSeries& s) {
  std::vector<Cyclotomic5> c;
  c.reserve(s.coeffs().size());
  for (const auto& x : s.coeffs()) c.emplace_back(x);
  return CycSeries(s.var(), std::move(c));
}

}  // namespace crepant
