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

#include <compare>
#include <map>
#include <string>

#include <json.hpp>

#include "crepant/hypergeom.hpp"
#include "crepant/rational.hpp"

namespace crepant {

/// L^l X^x (DX)^dx (D^2X)^d2x Y^y; l may be negative.
struct Monomial {
  int l = 0, x = 0, dx = 0, d2x = 0, y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const { return {l + o.l, x + o.x, dx + o.dx, d2x + o.d2x, y + o.y}; }
  bool is_one() const { return l == 0 && x == 0 && dx == 0 && d2x == 0 && y == 0; }
  bool l_only() const { return x == 0 && dx == 0 && d2x == 0 && y == 0; }
  std::string str() const;
};

/// Element of Q[L, 1/L][X, DX, D^2X, Y] tagged with a geometry.
class DiffRingElem {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit DiffRingElem(Geometry g) : geom_(g) {}
  DiffRingElem(Geometry g, const Rational& c);
  DiffRingElem(Geometry g, const Monomial& m, const Rational& c = Rational(1));

  static DiffRingElem L(Geometry g, int power = 1) { return {g, Monomial{power, 0, 0, 0, 0}}; }
  static DiffRingElem X(Geometry g) { return {g, Monomial{0, 1, 0, 0, 0}}; }
  static DiffRingElem DX(Geometry g) { return {g, Monomial{0, 0, 1, 0, 0}}; }
  static DiffRingElem D2X(Geometry g) { return {g, Monomial{0, 0, 0, 1, 0}}; }
  static DiffRingElem Y(Geometry g) { return {g, Monomial{0, 0, 0, 0, 1}}; }

  Geometry geometry() const { return geom_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of m (zero if absent).
  Rational coeff(const Monomial& m) const;
  bool l_only() const;
  int min_l() const;
  int max_l() const;

  void add_term(const Monomial& m, const Rational& c);
  DiffRingElem pow(int e) const;

  DiffRingElem& operator+=(const DiffRingElem& o);
  DiffRingElem& operator-=(const DiffRingElem& o);
  DiffRingElem& operator*=(const Rational& c);
  friend DiffRingElem operator+(DiffRingElem a, const DiffRingElem& b) { return a += b; }
  friend DiffRingElem operator-(DiffRingElem a, const DiffRingElem& b) { return a -= b; }
  friend DiffRingElem operator*(DiffRingElem a, const Rational& c) { return a *= c; }
  friend DiffRingElem operator*(const Rational& c, DiffRingElem a) { return a *= c; }
  friend DiffRingElem operator-(DiffRingElem a) { return a *= Rational(-1); }
  friend DiffRingElem operator*(const DiffRingElem& a, const DiffRingElem& b);
  friend bool operator==(const DiffRingElem& a, const DiffRingElem& b) {
    return a.geom_ == b.geom_ && a.terms_ == b.terms_;
  }

  std::string str() const;
  nlohmann::ordered_json to_json() const;

 private:
  void check(const DiffRingElem& o) const;
  Geometry geom_;
  Terms terms_;
};

/// The derivation D, closed on the generators.
DiffRingElem derive(const DiffRingElem& f);

/// D applied to each generator: L, X, DX, D^2X, Y (in that order).
const std::array<DiffRingElem, 5>& generator_derivatives(Geometry g);

/// KP4 -> orbifold ring map L, X, DX, D^2X, Y -> -L/5, -X/5, DX/25, -D^2X/125, -Y/5.
DiffRingElem transform_T(const DiffRingElem& f);

/// L^0 part at X = Y = -1/5, DX = D^2X = 0.
Rational m_restrict(const DiffRingElem& f);

/// Substitutes the series of d. Negative L-powers are cleared before dividing,
/// which costs one order per power when L vanishes at the origin.
QSeries eval_series(const DiffRingElem& f, const HGData& d, int order);
QSeries eval_series(const DiffRingElem& f, int order);

}  // namespace crepant
