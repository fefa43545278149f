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

#include "crepant/diffring.hpp"

#include <sstream>

namespace crepant {

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  auto put = [&](const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  put("L", l);
  put("X", x);
  put("DX", dx);
  put("D2X", d2x);
  put("Y", y);
  return s;
}

DiffRingElem::DiffRingElem(Geometry g, const Rational& c) : geom_(g) { add_term(Monomial{}, c); }

DiffRingElem::DiffRingElem(Geometry g, const Monomial& m, const Rational& c) : geom_(g) { add_term(m, c); }

Rational DiffRingElem::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool DiffRingElem::l_only() const {
  for (const auto& [m, c] : terms_)
    if (!m.l_only()) return false;
  return true;
}

int DiffRingElem::min_l() const {
  int r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    r = first ? m.l : std::min(r, m.l);
    first = false;
  }
  return r;
}

int DiffRingElem::max_l() const {
  int r = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    r = first ? m.l : std::max(r, m.l);
    first = false;
  }
  return r;
}

void DiffRingElem::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffRingElem::check(const DiffRingElem& o) const {
  if (!(geom_ == o.geom_))
    throw Error(ErrorCode::WrongGeometry, std::string("mixing ") + geom_.name() + " and " + o.geom_.name());
}

DiffRingElem& DiffRingElem::operator+=(const DiffRingElem& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffRingElem& DiffRingElem::operator-=(const DiffRingElem& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffRingElem& DiffRingElem::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffRingElem operator*(const DiffRingElem& a, const DiffRingElem& b) {
  a.check(b);
  DiffRingElem r(a.geom_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DiffRingElem DiffRingElem::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "DiffRingElem::pow: negative exponent");
  DiffRingElem r(geom_, Rational(1));
  DiffRingElem b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

std::string DiffRingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!m.is_one()) os << "*" << m.str();
  }
  return os.str();
}

nlohmann::ordered_json DiffRingElem::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [m, c] : terms_) j[m.str()] = c.str();
  return j;
}

namespace {

std::array<DiffRingElem, 5> make_rules(Geometry g) {
  const auto one = DiffRingElem(g, Rational(1));
  const auto L = DiffRingElem::L(g);
  const auto L5 = DiffRingElem::L(g, 5);
  const auto X = DiffRingElem::X(g);
  const auto DX = DiffRingElem::DX(g);
  const auto D2X = DiffRingElem::D2X(g);
  const auto Y = DiffRingElem::Y(g);
  const auto X2 = X * X;
  // D^3X enters B_4 as s^4 * D^3X; the rest of B_4 / s^4 is `tail`.
  const auto tail = X * D2X * Rational(4) + DX * DX * Rational(3) + X2 * DX * Rational(6) + X2 * X2;
  const bool orb = g.tag == GeometryTag::c5z5;
  const Rational s = orb ? Rational(1, 5) : Rational(-5);
  const auto B1 = X * s;
  const auto B2 = (DX + X2) * s.pow(2);
  const auto B3 = (D2X + X * DX * Rational(3) + X2 * X) * s.pow(3);

  DiffRingElem dl(g), d3x(g), dy(g);
  if (!orb) {
    dl = (DiffRingElem::L(g, 6) - L) * Rational(1, 5);
    const auto rhs = (one - L5) * (B3 * Rational(10) - B2 * Rational(35) + B1 * Rational(50) - one * Rational(24));
    d3x = rhs * s.pow(4).inverse() - tail;
    const auto A = L5 - one;
    dy = A * Rational(2, 5) + A * X * Rational(2) - X2 * Rational(2) - DX * Rational(4) + A * Y - Y * Y -
         X * Y * Rational(2);
  } else {
    dl = L + DiffRingElem::L(g, 6) * Rational(1, 3125);
    const auto A = one + L5 * Rational(1, 3125);
    const auto rhs =
        A * (B3 * Rational(2) - B2 * Rational(7, 5) + B1 * Rational(2, 5) - one * Rational(24, 625));
    d3x = rhs * s.pow(4).inverse() - tail;
    dy = A * Rational(-10) + A * X * Rational(10) + A * Y * Rational(5) - X2 * Rational(2) - DX * Rational(4) -
         X * Y * Rational(2) - Y * Y;
  }
  return {dl, DX, D2X, d3x, dy};
}

}  // namespace

const std::array<DiffRingElem, 5>& generator_derivatives(Geometry g) {
  static const std::array<DiffRingElem, 5> kp4 = make_rules(Geometry::kp4());
  static const std::array<DiffRingElem, 5> orb = make_rules(Geometry::c5z5());
  return g.tag == GeometryTag::kp4 ? kp4 : orb;
}

DiffRingElem derive(const DiffRingElem& f) {
  const Geometry g = f.geometry();
  const auto& rules = generator_derivatives(g);
  static const DiffRingElem dl_over_l_kp4 = generator_derivatives(Geometry::kp4())[0] * DiffRingElem::L(Geometry::kp4(), -1);
  static const DiffRingElem dl_over_l_orb =
      generator_derivatives(Geometry::c5z5())[0] * DiffRingElem::L(Geometry::c5z5(), -1);
  const DiffRingElem& dl_over_l = g.tag == GeometryTag::kp4 ? dl_over_l_kp4 : dl_over_l_orb;

  DiffRingElem r(g);
  for (const auto& [m, c] : f.terms()) {
    if (m.l != 0) r += DiffRingElem(g, m, c * Rational(m.l)) * dl_over_l;
    if (m.x != 0) r += DiffRingElem(g, Monomial{m.l, m.x - 1, m.dx, m.d2x, m.y}, c * Rational(m.x)) * rules[1];
    if (m.dx != 0) r += DiffRingElem(g, Monomial{m.l, m.x, m.dx - 1, m.d2x, m.y}, c * Rational(m.dx)) * rules[2];
    if (m.d2x != 0)
      r += DiffRingElem(g, Monomial{m.l, m.x, m.dx, m.d2x - 1, m.y}, c * Rational(m.d2x)) * rules[3];
    if (m.y != 0) r += DiffRingElem(g, Monomial{m.l, m.x, m.dx, m.d2x, m.y - 1}, c * Rational(m.y)) * rules[4];
  }
  return r;
}

DiffRingElem transform_T(const DiffRingElem& f) {
  if (f.geometry().tag != GeometryTag::kp4)
    throw Error(ErrorCode::WrongGeometry, "transform_T expects a kp4 element");
  const Rational m5(-1, 5);
  DiffRingElem r(Geometry::c5z5());
  for (const auto& [m, c] : f.terms()) {
    const Rational s = m5.pow(m.l) * m5.pow(m.x) * Rational(1, 25).pow(m.dx) * Rational(-1, 125).pow(m.d2x) *
                       m5.pow(m.y);
    r.add_term(m, c * s);
  }
  return r;
}

Rational m_restrict(const DiffRingElem& f) {
  if (f.geometry().tag != GeometryTag::kp4) throw Error(ErrorCode::WrongGeometry, "m_restrict expects a kp4 element");
  const Rational m5(-1, 5);
  Rational r;
  for (const auto& [m, c] : f.terms())
    if (m.l == 0 && m.dx == 0 && m.d2x == 0) r += c * m5.pow(m.x + m.y);
  return r;
}

namespace {

class PowerTable {
 public:
  PowerTable(const QSeries& base, int order) : base_(base.truncated(order)) {
    pows_.push_back(QSeries::constant(base.var(), Rational(1), order));
  }
  const QSeries& get(int e) {
    while (static_cast<int>(pows_.size()) <= e) pows_.push_back(pows_.back() * base_);
    return pows_[static_cast<std::size_t>(e)];
  }

 private:
  QSeries base_;
  std::vector<QSeries> pows_;
};

}  // namespace

QSeries eval_series(const DiffRingElem& f, const HGData& d, int order) {
  if (!(f.geometry() == d.geometry))
    throw Error(ErrorCode::WrongGeometry, std::string("eval_series: element is ") + f.geometry().name() +
                                              ", data is " + d.geometry.name());
  const Var v = d.geometry.var();
  if (f.is_zero()) return QSeries(v, order);
  const int shift = std::max(0, -f.min_l());
  const bool l_unit = !d.L[0].is_zero();
  const int work = l_unit ? order : order + shift;
  if (d.order < work)
    throw Error(ErrorCode::InsufficientOrder, "eval_series needs HG data of order " + std::to_string(work) +
                                                  ", have " + std::to_string(d.order));
  PowerTable Lp(d.L, work), Xp(d.X, work), DXp(d.DX, work), D2Xp(d.D2X, work), Yp(d.Y, work);
  QSeries acc(v, work);
  for (const auto& [m, c] : f.terms()) {
    QSeries t = Lp.get(m.l + shift);
    if (m.x) t = t * Xp.get(m.x);
    if (m.dx) t = t * DXp.get(m.dx);
    if (m.d2x) t = t * D2Xp.get(m.d2x);
    if (m.y) t = t * Yp.get(m.y);
    acc += t * c;
  }
  if (shift == 0) return acc;
  return series_div(acc, Lp.get(shift)).truncated(order);
}

QSeries eval_series(const DiffRingElem& f, int order) {
  const int shift = std::max(0, -f.min_l());
  return eval_series(f, *hg_data(f.geometry(), std::max(order + shift, 6)), order);
}

}  // namespace crepant
