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

#include "crepant/frobenius.hpp"

#include <algorithm>

#include "crepant/hypergeom.hpp"

namespace crepant {

namespace {

constexpr int kPad = 8;

std::shared_ptr<const HGData> orb_data(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "frobenius: order must be >= 1");
  return hg_data(Geometry::c5z5(), std::max(order + kPad, 6));
}

QSeries zero(int order) { return QSeries(Var::psi, order); }

Vec5 zero_vec(int order) {
  Vec5 v;
  for (auto& s : v) s = zero(order);
  return v;
}

Tensor3 zero_tensor(int order) {
  Tensor3 t;
  for (auto& a : t)
    for (auto& b : a) b = zero_vec(order);
  return t;
}

int neg(int i) { return (5 - i % 5) % 5; }

// a * b with structure constants p.
Vec5 multiply(const Tensor3& p, const Vec5& a, const Vec5& b, int order) {
  Vec5 r = zero_vec(order);
  for (int i = 0; i < 5; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 5; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      const QSeries ab = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      for (int k = 0; k < 5; ++k) {
        const QSeries& c = p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        if (!c.is_zero()) r[static_cast<std::size_t>(k)] += ab * c;
      }
    }
  }
  for (auto& s : r) s = s.truncated(order);
  return r;
}

Vec5 basis(int i, int order) {
  Vec5 v = zero_vec(order);
  v[static_cast<std::size_t>(i)] = QSeries::constant(Var::psi, Rational(1), order);
  return v;
}

CycSeries zeta_times(int k, const QSeries& s) {
  CycSeries r = lift(QSeries(s.var(), s.order()));
  const Cyclotomic5 z = zeta_power(k);
  for (int n = 0; n <= s.order(); ++n)
    if (!s[n].is_zero()) r.at(n) = z * Cyclotomic5(s[n]);
  return r;
}

void add_cyc(const std::string& where, VerificationReport& rep, const CycSeries& s) {
  for (int c = 0; c < 4; ++c) {
    QSeries part(s.var(), s.order());
    for (int n = 0; n <= s.order(); ++n) part.at(n) = s[n][c];
    rep.add_series(where + "[zeta^" + std::to_string(c) + "]", part);
  }
}

}  // namespace

Rational metric(int i, int j) { return (i + j) % 5 == 0 ? Rational(1, 5) : Rational(0); }

CohomSeries s_operator(int k, int order) {
  if (k < 0 || k > 4) throw Error(ErrorCode::InvalidArgument, "s_operator: k must be in 0..4");
  const auto d = orb_data(order);
  const CohomSeries& F = d->chain[static_cast<std::size_t>(k)];
  const QSeries C = leading_term(F).value;
  CohomSeries S(Var::psi, order);
  for (int j = 0; j < 5; ++j)
    for (const auto& [e, s] : F.component(j)) S.set(j, e, series_div(s, C).truncated(order));
  return S;
}

Tensor3 three_point_correlators(int order) {
  const auto d = orb_data(order);
  const auto& C = d->C;
  Tensor3 t = zero_tensor(order);
  const Rational fifth(1, 5);
  auto put = [&](int a, int b, int c, const QSeries& v) {
    const QSeries w = (v * fifth).truncated(order);
    std::array<int, 3> idx{a, b, c};
    std::sort(idx.begin(), idx.end());
    do {
      t[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[1])][static_cast<std::size_t>(idx[2])] = w;
    } while (std::next_permutation(idx.begin(), idx.end()));
  };
  const QSeries one = QSeries::constant(Var::psi, Rational(1), order);
  put(0, 0, 0, one);
  put(0, 1, 4, one);
  put(0, 2, 3, one);
  put(1, 1, 3, series_div(C[2], C[1]));
  put(1, 2, 2, series_div(C[3], C[1]));
  put(2, 4, 4, series_div(C[1], C[2]));
  put(3, 3, 4, series_div(C[1], C[3]));
  return t;
}

Tensor3 correlators_from_birkhoff(int order) {
  const auto d = orb_data(order);
  const int work = order + kPad / 2;
  const QSeries C1 = leading_term(d->chain[1]).value;
  // phi_1 * phi_k from the z^0 part of zD S(phi_k) = D(z^-1 part of S(phi_k)).
  std::array<Vec5, 5> m1;
  for (int k = 0; k < 5; ++k) {
    const CohomSeries S = s_operator(k, work + 2);
    for (int c = 0; c < 5; ++c)
      m1[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] =
          series_div(d_operator(S.coeff(c, -1)), C1).truncated(work);
  }
  Tensor3 prod = zero_tensor(work);
  for (int b = 0; b < 5; ++b) prod[0][static_cast<std::size_t>(b)] = basis(b, work);
  for (int a = 1; a < 5; ++a) {
    // phi_a = (phi_1 * phi_{a-1}) / lambda_a
    const QSeries& lambda = m1[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(a)];
    for (int b = 0; b < 5; ++b) {
      const Vec5& prev = prod[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
      Vec5 acc = zero_vec(work);
      for (int k = 0; k < 5; ++k) {
        if (prev[static_cast<std::size_t>(k)].is_zero()) continue;
        for (int c = 0; c < 5; ++c)
          acc[static_cast<std::size_t>(c)] +=
              prev[static_cast<std::size_t>(k)] * m1[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      }
      for (auto& s : acc) s = series_div(s, lambda);
      prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = acc;
    }
  }
  Tensor3 t = zero_tensor(order);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] =
            (prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(neg(c))] *
             Rational(1, 5))
                .truncated(order);
  return t;
}

Vec5 quantum_product(int i, int j, int order) {
  if (i < 0 || i > 4 || j < 0 || j > 4) throw Error(ErrorCode::InvalidArgument, "quantum_product: index out of range");
  const Tensor3 t = three_point_correlators(order);
  Vec5 r;
  for (int k = 0; k < 5; ++k)
    r[static_cast<std::size_t>(k)] =
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(neg(k))] * Rational(5);
  return r;
}

OrbFrobenius frobenius_structure(int order) {
  const auto d = orb_data(order);
  OrbFrobenius f;
  f.order = order;
  const Tensor3 t = three_point_correlators(order);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k)
        f.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(neg(k))] *
            Rational(5);
  const auto& C = d->C;
  const QSeries& L = d->L;
  f.nu[0] = QSeries::constant(Var::psi, Rational(1), order);
  f.nu[1] = (-series_div(C[1], L)).truncated(order);
  f.nu[2] = series_div(C[1] * C[2], L * L).truncated(order);
  f.nu[3] = series_div(L * L, C[1] * C[2]).truncated(order);
  f.nu[4] = (-series_div(L, C[1])).truncated(order);
  return f;
}

Idempotents idempotents_and_coordinates(int order) {
  const auto d = orb_data(order);
  const OrbFrobenius f = frobenius_structure(order);
  Idempotents id;
  id.order = order;
  for (int a = 0; a < 5; ++a)
    for (int i = 0; i < 5; ++i)
      id.e[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] =
          zeta_times(-a * i, f.nu[static_cast<std::size_t>(i)] * Rational(1, 5));
  for (int a = 0; a < 5; ++a)
    for (int i = 0; i < 5; ++i)
      id.psi[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] =
          id.e[static_cast<std::size_t>(a)][static_cast<std::size_t>(neg(i))];
  // phi_1 = sum_alpha c_alpha e_alpha with c_alpha = eta(phi_1, e_alpha) / eta(e_alpha, e_alpha),
  // eta(e_alpha, e_alpha) = 1/25; then du/dpsi = c_alpha ds/dpsi.
  const QSeries psi1 = QSeries::monomial(Var::psi, Rational(1), 1, d->order);
  const QSeries ds = series_div(d_operator(d->mirror), psi1).truncated(order);
  for (int a = 0; a < 5; ++a) {
    const CycSeries c = id.e[static_cast<std::size_t>(a)][4] * Cyclotomic5(Rational(5));
    id.du[static_cast<std::size_t>(a)] = c * lift(ds);
  }
  return id;
}

VerificationReport check_associativity(int order) {
  VerificationReport r("frobenius.associativity");
  r.params = {{"order", order}};
  const OrbFrobenius f = frobenius_structure(order);
  int triples = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        const Vec5 lhs = multiply(f.product, multiply(f.product, basis(i, order), basis(j, order), order),
                                  basis(k, order), order);
        const Vec5 rhs = multiply(f.product, basis(i, order),
                                  multiply(f.product, basis(j, order), basis(k, order), order), order);
        for (int c = 0; c < 5; ++c)
          r.add_series("(" + std::to_string(i) + std::to_string(j) + ")" + std::to_string(k) + "[" +
                           std::to_string(c) + "]",
                       lhs[static_cast<std::size_t>(c)] - rhs[static_cast<std::size_t>(c)]);
        ++triples;
      }
  for (int i = 0; i < 5; ++i) {
    const Vec5 u = multiply(f.product, basis(0, order), basis(i, order), order);
    for (int c = 0; c < 5; ++c)
      r.add_series("unit" + std::to_string(i) + "[" + std::to_string(c) + "]",
                   u[static_cast<std::size_t>(c)] - basis(i, order)[static_cast<std::size_t>(c)]);
  }
  r.data["triples"] = triples;
  r.finalize();
  return r;
}

VerificationReport check_correlators(int order) {
  VerificationReport r("frobenius.correlators");
  r.params = {{"order", order}};
  const auto d = orb_data(order);
  const Tensor3 closed = three_point_correlators(order);
  const Tensor3 chain = correlators_from_birkhoff(order);
  int triples = 0, nonzero = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b)
      for (int c = b; c < 5; ++c) {
        const QSeries& x = closed[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        r.add_series("<" + std::to_string(a) + std::to_string(b) + std::to_string(c) + ">",
                     x - chain[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]);
        ++triples;
        if (!x.is_zero()) ++nonzero;
      }
  // Full symmetry of the chain-derived tensor.
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        std::array<int, 3> s{a, b, c};
        std::sort(s.begin(), s.end());
        r.add_series("sym<" + std::to_string(a) + std::to_string(b) + std::to_string(c) + ">",
                     chain[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] -
                         chain[static_cast<std::size_t>(s[0])][static_cast<std::size_t>(s[1])]
                              [static_cast<std::size_t>(s[2])]);
      }
  // The printed L^5 forms against their C-relation rewrites.
  const auto& C = d->C;
  const QSeries L5 = d->L.pow(5);
  const QSeries c13c22 = C[1] * C[1] * C[1] * C[2] * C[2];
  r.add_series("-L^5/(C1^3C2^2)-C3/C1", (-series_div(L5, c13c22) - series_div(C[3], C[1])).truncated(order));
  r.add_series("-C1^3C2^2/L^5-C1/C3", (-series_div(c13c22, L5) - series_div(C[1], C[3])).truncated(order));
  r.data["triples"] = triples;
  r.data["nonzero_patterns"] = nonzero;
  r.finalize();
  return r;
}

VerificationReport check_idempotents(int order) {
  VerificationReport r("frobenius.idempotents");
  r.params = {{"order", order}};
  const auto d = orb_data(order);
  const OrbFrobenius f = frobenius_structure(order);
  const Idempotents id = idempotents_and_coordinates(order);
  const auto& nu = f.nu;

  // phi~_i * phi~_j = phi~_{i+j}
  std::array<std::array<Vec5, 5>, 5> tt;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Vec5 a = zero_vec(order), b = zero_vec(order);
      a[static_cast<std::size_t>(i)] = nu[static_cast<std::size_t>(i)];
      b[static_cast<std::size_t>(j)] = nu[static_cast<std::size_t>(j)];
      tt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = multiply(f.product, a, b, order);
      const int s = (i + j) % 5;
      for (int c = 0; c < 5; ++c) {
        const QSeries expect = c == s ? nu[static_cast<std::size_t>(s)] : zero(order);
        r.add_series("nu" + std::to_string(i) + "*nu" + std::to_string(j) + "[" + std::to_string(c) + "]",
                     tt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] - expect);
      }
    }

  // e_a * e_b = delta_ab e_a, using e_a = (1/5) sum_i zeta^(-a i) phi~_i.
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        CycSeries acc = lift(zero(order));
        for (int i = 0; i < 5; ++i)
          for (int j = 0; j < 5; ++j) {
            const QSeries& t = tt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            if (!t.is_zero()) acc += zeta_times(-a * i - b * j, t * Rational(1, 25));
          }
        const CycSeries expect = a == b ? id.e[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] : lift(zero(order));
        add_cyc("e" + std::to_string(a) + "*e" + std::to_string(b) + "[" + std::to_string(c) + "]", r, acc - expect);
      }

  // sum_a e_a = phi_0
  for (int c = 0; c < 5; ++c) {
    CycSeries acc = lift(zero(order));
    for (int a = 0; a < 5; ++a) acc += id.e[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
    add_cyc("sum e[" + std::to_string(c) + "]", r, acc - lift(basis(0, order)[static_cast<std::size_t>(c)]));
  }

  // eta(e_a, e_b) = delta_ab / 25
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      CycSeries acc = lift(zero(order));
      for (int i = 0; i < 5; ++i)
        acc += id.e[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] *
               id.e[static_cast<std::size_t>(b)][static_cast<std::size_t>(neg(i))] * Cyclotomic5(Rational(1, 5));
      const Rational expect = a == b ? Rational(1, 25) : Rational(0);
      add_cyc("eta(e" + std::to_string(a) + ",e" + std::to_string(b) + ")", r,
              acc - lift(QSeries::constant(Var::psi, expect, order)));
    }

  // Transition matrix against its closed form.
  const auto& C = d->C;
  const QSeries& L = d->L;
  const std::array<QSeries, 5> row0{
      QSeries::constant(Var::psi, Rational(1), order),
      (-series_div(L, C[1])).truncated(order),
      series_div(L * L, C[1] * C[2]).truncated(order),
      series_div(C[1] * C[2], L * L).truncated(order),
      (-series_div(C[1], L)).truncated(order),
  };
  for (int a = 0; a < 5; ++a)
    for (int i = 0; i < 5; ++i)
      add_cyc("Psi[" + std::to_string(a) + "][" + std::to_string(i) + "]", r,
              id.psi[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] -
                  zeta_times(a * i, row0[static_cast<std::size_t>(i)] * Rational(1, 5)));

  // du^a/dpsi = -zeta^a L / psi
  const QSeries psi1 = QSeries::monomial(Var::psi, Rational(1), 1, d->order);
  const QSeries l_over_psi = (-series_div(L, psi1)).truncated(order);
  for (int a = 0; a < 5; ++a)
    add_cyc("du" + std::to_string(a), r, id.du[static_cast<std::size_t>(a)] - zeta_times(a, l_over_psi));
  r.finalize();
  return r;
}

}  // namespace crepant
