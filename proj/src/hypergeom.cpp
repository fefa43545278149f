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

#include "crepant/hypergeom.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace crepant {

namespace {

using HPoly = std::array<Rational, 5>;  // truncated at H^5

HPoly hmul(const HPoly& a, const HPoly& b) {
  HPoly r{};
  for (int i = 0; i < 5; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < 5; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

HPoly hinv(const HPoly& a) {
  HPoly r{};
  r[0] = inv(a[0]);
  for (int k = 1; k < 5; ++k) {
    Rational s;
    for (int j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s * r[0];
  }
  return r;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f, mpz_class(1));
}

void require_orders(int x_order, int z_order) {
  if (x_order < 1 || z_order < 1) throw Error(ErrorCode::InvalidArgument, "i_function: orders must be >= 1");
}

CohomSeries kp4_i_function(int n, int z_order) {
  std::array<QSeries, 5> f;
  for (auto& s : f) s = QSeries(Var::q, n);
  for (int d = 0; d <= n; ++d) {
    HPoly num{};
    num[0] = 1;
    for (int k = 0; k < 5 * d; ++k) num = hmul(num, HPoly{Rational(-k), Rational(-5), 0, 0, 0});
    HPoly den{};
    den[0] = 1;
    for (int k = 1; k <= d; ++k) {
      const HPoly lin{Rational(k), Rational(1), 0, 0, 0};
      for (int e = 0; e < 5; ++e) den = hmul(den, lin);
    }
    const HPoly t = hmul(num, hinv(den));
    for (int m = 0; m < 5; ++m) f[static_cast<std::size_t>(m)].at(d) = t[static_cast<std::size_t>(m)];
  }
  CohomSeries I(Var::q, n);
  for (int m = 0; m < 5 && m <= z_order; ++m) I.set(m, -m, f[static_cast<std::size_t>(m)]);
  return I;
}

CohomSeries orb_i_function(int n, int z_order) {
  CohomSeries I(Var::psi, n);
  std::map<std::pair<int, int>, QSeries> acc;
  for (int a = 0; a <= n; ++a) {
    const int m = a / 5, r = a % 5;
    // prod over k = r/5 + l of (1 - k^5 w), w = z^5
    std::vector<Rational> poly{Rational(1)};
    for (int l = 0; l < m; ++l) {
      const Rational k5 = (Rational(r, 5) + Rational(l)).pow(5);
      std::vector<Rational> next(poly.size() + 1);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] -= k5 * poly[i];
      }
      poly = std::move(next);
    }
    const Rational fa = inv(factorial(a));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      if (poly[e].is_zero()) continue;
      const int zp = 5 * static_cast<int>(e) - a;
      if (zp < -z_order) continue;
      auto [it, fresh] = acc.try_emplace({r, zp}, Var::psi, n);
      it->second.at(a) += poly[e] * fa;
    }
  }
  for (auto& [key, s] : acc) I.set(key.first, key.second, std::move(s));
  return I;
}

}  // namespace

Geometry Geometry::parse(std::string_view name) {
  if (name == "kp4") return kp4();
  if (name == "c5z5") return c5z5();
  throw Error(ErrorCode::InvalidArgument, "unknown geometry '" + std::string(name) + "' (expected kp4 or c5z5)");
}

QSeries binomial_series(Var var, const Rational& alpha, const Rational& c, int step, int order) {
  if (step < 1) throw Error(ErrorCode::InvalidArgument, "binomial_series: step must be positive");
  QSeries s(var, order);
  Rational coef(1), cp(1);
  for (int k = 0; k * step <= order; ++k) {
    s.at(k * step) = coef * cp;
    coef = coef * (alpha - Rational(k)) / Rational(k + 1);
    cp *= c;
  }
  return s;
}

QSeries l_closed_form(Geometry g, int order) {
  if (g.tag == GeometryTag::kp4) return binomial_series(Var::q, Rational(-1, 5), Rational(3125), 1, order);
  QSeries b = binomial_series(Var::psi, Rational(-1, 5), Rational(1, 3125), 5, order);
  return (-b).shifted(1).truncated(order);
}

CohomSeries i_function(Geometry g, int x_order, int z_order) {
  require_orders(x_order, z_order);
  return g.tag == GeometryTag::kp4 ? kp4_i_function(x_order, z_order) : orb_i_function(x_order, z_order);
}

QSeries mirror_map(Geometry g, int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "mirror_map: order must be >= 1");
  return i_function(g, order, 1).coeff(1, -1);
}

LeadingTerm leading_term(const CohomSeries& F) {
  LeadingTerm lt;
  int found = -1;
  for (int j = 0; j < 5; ++j) {
    for (const auto& [e, s] : F.component(j)) {
      if (e > 0 && !s.is_zero())
        throw Error(ErrorCode::NonUnitLeadingTerm, "positive z-power in component " + std::to_string(j));
      if (e == 0 && !s.is_zero()) {
        if (found >= 0)
          throw Error(ErrorCode::NonUnitLeadingTerm, "z^0 coefficient spread over components " +
                                                         std::to_string(found) + " and " + std::to_string(j));
        found = j;
        lt.value = s;
      }
    }
  }
  if (found < 0) throw Error(ErrorCode::NonUnitLeadingTerm, "z^0 coefficient vanishes");
  lt.component = found;
  return lt;
}

CohomSeries birkhoff_step(const CohomSeries& F, Geometry g) {
  const LeadingTerm lt = leading_term(F);
  std::vector<std::tuple<int, int, QSeries>> quot;
  int order = F.order();
  for (int j = 0; j < 5; ++j)
    for (const auto& [e, s] : F.component(j)) {
      QSeries q = series_div(s, lt.value);
      order = std::min(order, q.order());
      quot.emplace_back(j, e, std::move(q));
    }
  CohomSeries out(F.var(), order);
  for (const auto& [j, e, q] : quot) {
    const QSeries qt = q.truncated(order);
    QSeries dq = d_operator(qt);
    if (!dq.is_zero()) out.add(j, e + 1, dq);
    if (g.tag == GeometryTag::kp4 && j + 1 < 5) out.add(j + 1, e, qt);
  }
  return out;
}

HGData compute_hg_data(Geometry g, int order) {
  if (order < 6) throw Error(ErrorCode::InsufficientOrder, "compute_hg_data: order must be >= 6");
  HGData d;
  d.geometry = g;
  d.order = order;
  const bool orb = g.tag == GeometryTag::c5z5;
  const int internal = orb ? order + 6 : order;

  d.chain.push_back(i_function(g, internal, 5));
  const int steps = orb ? 5 : 4;
  for (int i = 0; i < steps; ++i) {
    const LeadingTerm lt = leading_term(d.chain.back());
    if (lt.component != i)
      throw Error(ErrorCode::Internal, "Birkhoff step " + std::to_string(i) + " leads on component " +
                                          std::to_string(lt.component));
    d.C[static_cast<std::size_t>(i)] = lt.value;
    d.chain.push_back(birkhoff_step(d.chain.back(), g).truncated_z(5 - (i + 1)));
  }
  if (orb) {
    const LeadingTerm lt = leading_term(d.chain.back());
    if (lt.component != 0) throw Error(ErrorCode::Internal, "closing Birkhoff step does not return to phi_0");
    d.C5 = lt.value.truncated(order);
  } else {
    d.C[4] = leading_term(d.chain.back()).value;
  }

  const QSeries X = series_div(d_operator(d.C[1]), d.C[1]);
  const QSeries Y = series_div(d_operator(d.C[2]), d.C[2]);
  for (auto& c : d.C) c = c.truncated(order);
  d.L = l_closed_form(g, order);
  d.X = X.truncated(order);
  d.Y = Y.truncated(order);
  d.DX = d_operator(d.X);
  d.D2X = d_operator(d.DX);
  d.D3X = d_operator(d.D2X);
  d.mirror = d.chain[0].coeff(1, -1).truncated(order);

  const Rational s = orb ? Rational(1, 5) : Rational(-5);
  const QSeries X2 = d.X * d.X;
  d.B[0] = d.X * s;
  d.B[1] = (d.DX + X2) * s.pow(2);
  d.B[2] = (d.D2X + d.X * d.DX * Rational(3) + X2 * d.X) * s.pow(3);
  d.B[3] = (d.D3X + d.X * d.D2X * Rational(4) + d.DX * d.DX * Rational(3) + X2 * d.DX * Rational(6) + X2 * X2) *
           s.pow(4);
  return d;
}

std::shared_ptr<const HGData> hg_data(Geometry g, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const HGData>> cache;
  const std::pair<int, int> key{static_cast<int>(g.tag), order};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto d = std::make_shared<const HGData>(compute_hg_data(g, order));
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, std::move(d)).first->second;
}

VerificationReport check_relations(const HGData& d) {
  VerificationReport r(std::string("relations.") + d.geometry.name());
  r.params = {{"geometry", d.geometry.name()}, {"order", d.order}};
  const Var v = d.geometry.var();
  const int n = d.order;
  const bool orb = d.geometry.tag == GeometryTag::c5z5;
  const QSeries one = QSeries::constant(v, Rational(1), n);
  const QSeries L5 = d.L.pow(5);

  r.add_series("C0-1", d.C[0] - one);
  r.add_series("C2-C4", d.C[2] - d.C[4]);
  const QSeries prod = d.C[1] * d.C[1] * d.C[2] * d.C[2] * d.C[3];
  r.add_series("C1^2C2^2C3-(-1)^delta L^5", orb ? prod + L5 : prod - L5);
  if (orb) {
    r.add_series("C5-C1", d.C5 - d.C[1]);
    r.add_series("C1-Ds", d.C[1] - d_operator(d.mirror));
  } else {
    r.add_series("C1-1-Dt", d.C[1] - one - d_operator(d.mirror));
  }

  const QSeries& X = d.X;
  const QSeries& Y = d.Y;
  const auto& B = d.B;
  if (!orb) {
    const QSeries A = one - L5;
    const QSeries rhs = A * (B[2] * Rational(10) - B[1] * Rational(35) + B[0] * Rational(50) - one * Rational(24));
    r.add_series("B4-relation", B[3] - rhs);
    const QSeries Am = L5 - one;
    const QSeries dy = Am * Rational(2, 5) + Am * X * Rational(2) - X * X * Rational(2) - d.DX * Rational(4) +
                       Am * Y - Y * Y - X * Y * Rational(2);
    r.add_series("DY-relation", d_operator(Y) - dy);
  } else {
    const QSeries A = one + L5 * Rational(1, 3125);
    const QSeries rhs =
        A * (B[2] * Rational(2) - B[1] * Rational(7, 5) + B[0] * Rational(2, 5) - one * Rational(24, 625));
    r.add_series("B4-relation", B[3] - rhs);
    const QSeries dy = A * Rational(-10) + A * X * Rational(10) + A * Y * Rational(5) - X * X * Rational(2) -
                       d.DX * Rational(4) - X * Y * Rational(2) - Y * Y;
    r.add_series("DY-relation", d_operator(Y) - dy);
  }
  r.finalize();
  return r;
}

}  // namespace crepant
