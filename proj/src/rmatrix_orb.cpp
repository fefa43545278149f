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

#include "crepant/rmatrix_orb.hpp"

#include "crepant/bernoulli.hpp"
#include "crepant/hypergeom.hpp"

namespace crepant {

namespace {

CycSeries zeta_times(int k, const QSeries& s) {
  CycSeries r = lift(QSeries(s.var(), s.order()));
  const Cyclotomic5 z = zeta_power(k);
  for (int n = 0; n <= s.order(); ++n)
    if (!s[n].is_zero()) r.at(n) = z * Cyclotomic5(s[n]);
  return r;
}

}  // namespace

OrbRTable solve_e2(int K, int order, int hg_order) {
  if (K < 0 || order < 1) throw Error(ErrorCode::InvalidArgument, "solve_e2: need K >= 0 and order >= 1");
  if (hg_order < 0) hg_order = order + 2 * (K + 1) + 6;
  const auto d = hg_data(Geometry::c5z5(), std::max(hg_order, 6));
  const auto& C = d->C;
  const QSeries& L = d->L;
  const int H = d->order;

  OrbRTable t;
  t.K = K;
  t.order = order;
  t.hg_order = H;
  const QSeries one = QSeries::constant(Var::psi, Rational(1), H);
  t.n = {one, -series_div(L, C[1]), series_div(L * L, C[1] * C[2]), series_div(C[1] * C[2], L * L),
         -series_div(C[1], L)};
  t.kappa = {C[1], C[2], C[3], C[2], C[1]};
  Row5 b;
  for (int j = 0; j < 5; ++j)
    b[static_cast<std::size_t>(j)] = t.kappa[static_cast<std::size_t>(j)] * t.n[static_cast<std::size_t>((j + 1) % 5)];

  // Substituting the normalizations into line j at level k leaves the factors
  // zeta^((j-k+1) i), zeta^i zeta^((j-k) i) and zeta^((j+1-k) i) on its three
  // terms; they must agree so the normalized recursion is row independent.
  for (int i = 0; i < 5; ++i)
    for (int k = 0; k <= K + 1; ++k)
      for (int j = 0; j < 5; ++j) {
        const Cyclotomic5 a = zeta_power((j - k + 1) * i);
        const Cyclotomic5 c = zeta_power(i) * zeta_power((j - k) * i);
        const Cyclotomic5 e = zeta_power((((j + 1) % 5) - k) * i);
        if (!(a == c) || !(a == e))
          throw Error(ErrorCode::Internal, "normalization leaves a row-dependent factor at row " + std::to_string(i));
      }

  // L n_j / b_j = -1 and sum_j D(n_j)/b_j = 0.
  QSeries sum_dn(Var::psi, H);
  for (int j = 0; j < 5; ++j) {
    const QSeries q = series_div(L * t.n[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(j)]) + one;
    if (!q.is_zero()) throw Error(ErrorCode::Internal, "connection ratio differs from -1 on line " + std::to_string(j));
    sum_dn += series_div(d_operator(t.n[static_cast<std::size_t>(j)]), b[static_cast<std::size_t>(j)]);
  }
  if (!sum_dn.is_zero()) throw Error(ErrorCode::Internal, "sum of D(n_j)/b_j does not vanish");

  auto transport = [&](int j, const QSeries& prev) {
    return series_div(d_operator(t.n[static_cast<std::size_t>(j)] * prev), b[static_cast<std::size_t>(j)]);
  };

  Row5 cur;
  for (auto& s : cur) s = one;
  std::vector<Row5> levels{cur};
  for (int k = 1; k <= K + 1; ++k) {
    Row5 g;
    g[0] = QSeries(Var::psi, cur[0].order());
    for (int j = 0; j < 4; ++j)
      g[static_cast<std::size_t>(j + 1)] = g[static_cast<std::size_t>(j)] - transport(j, cur[static_cast<std::size_t>(j)]);
    const QSeries cycle = g[4] - transport(4, cur[4]);
    const int v = cycle.valuation();
    if (v <= cycle.order())
      throw Error(ErrorCode::ConsistencyFailure, "flatness cycle does not close at level " + std::to_string(k - 1) +
                                                     ", psi^" + std::to_string(v) + " = " + cycle[v].str());
    t.cycle_checked_levels.push_back(k - 1);
    if (k == K + 1) break;
    // sum_j D(n_j (f + g_j))/b_j = -(5/L) Df + beta = 0
    QSeries beta = transport(0, g[0]);
    for (int j = 1; j < 5; ++j) beta += transport(j, g[static_cast<std::size_t>(j)]);
    const QSeries rhs = L.truncated(std::min(L.order(), beta.order())) * beta * Rational(1, 5);
    if (!rhs[0].is_zero())
      throw Error(ErrorCode::ConsistencyFailure, "free series at level " + std::to_string(k) + " has no solution");
    QSeries f(Var::psi, rhs.order());
    for (int m = 1; m <= rhs.order(); ++m) f.at(m) = rhs[m] / Rational(m);
    for (int j = 0; j < 5; ++j) cur[static_cast<std::size_t>(j)] = f + g[static_cast<std::size_t>(j)];
    levels.push_back(cur);
  }

  for (const auto& lev : levels)
    for (const auto& s : lev)
      if (s.order() < order)
        throw Error(ErrorCode::InsufficientOrder, "solve_e2: internal order " + std::to_string(H) +
                                                      " leaves only psi^" + std::to_string(s.order()));
  for (const auto& lev : levels) {
    std::array<Row5, 5> rows;
    for (auto& row : rows)
      for (int j = 0; j < 5; ++j) row[static_cast<std::size_t>(j)] = lev[static_cast<std::size_t>(j)].truncated(order);
    t.R.push_back(rows);
  }
  for (auto& s : t.n) s = s.truncated(std::min(s.order(), order + 2));
  for (auto& s : t.kappa) s = s.truncated(std::min(s.order(), order + 2));
  return t;
}

std::vector<Rational> orb_prefactor(int i, int K) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "orb_prefactor: K must be >= 0");
  if (i < 0 || i > 4) throw Error(ErrorCode::InvalidArgument, "orb_prefactor: i must be in 0..4");
  QSeries f(Var::z, K);
  for (int k = 1; 5 * k <= K; ++k) {
    const Rational sign = k % 2 == 1 ? Rational(1) : Rational(-1);
    f.at(5 * k) = Rational(5) * sign * bernoulli_poly(5 * k + 1, Rational(i, 5)) / Rational(5 * k + 1) /
                  Rational(5 * k);
  }
  return series_exp(f).coeffs();
}

RMatrixOrb assemble_orb_r_matrix(const OrbRTable& t, bool with_prefactor) {
  RMatrixOrb m;
  m.K = t.K;
  m.order = t.order;
  m.with_prefactor = with_prefactor;
  for (int i = 0; i < 5; ++i) {
    std::vector<Rational> pre = with_prefactor ? orb_prefactor(i, t.K) : std::vector<Rational>{Rational(1)};
    pre.resize(static_cast<std::size_t>(t.K) + 1);
    for (int j = 0; j < 5; ++j)
      for (int n = 0; n <= t.K; ++n) {
        CycSeries acc = lift(QSeries(Var::psi, t.order));
        for (int k = 0; k <= n; ++k) {
          const Rational& p = pre[static_cast<std::size_t>(n - k)];
          if (p.is_zero()) continue;
          acc += zeta_times(-i * k, t.R[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * p);
        }
        m.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(std::move(acc));
      }
  }
  return m;
}

RMatrixOrb assemble_orb_r_matrix(int K, int order, bool with_prefactor) {
  return assemble_orb_r_matrix(solve_e2(K, order), with_prefactor);
}

VerificationReport check_e2_residuals(const OrbRTable& t) {
  VerificationReport r("e2.residuals");
  r.params = {{"z_order", t.K}, {"order", t.order}, {"hg_order", t.hg_order}};
  const auto d = hg_data(Geometry::c5z5(), t.hg_order);
  const QSeries& L = d->L;
  auto coeff = [&](std::size_t j) { return t.n[j]; };
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k <= t.K; ++k) {
      for (int j = 0; j < 5; ++j) {
        const int j1 = (j + 1) % 5;
        const auto& lev = t.R[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        // D R^{k-1}_ij + zeta^i L R^k_ij + kappa_j R^k_{i,j+1}, R^k_ij = n_j zeta^((j-k) i) R~^k_ij
        CycSeries line = zeta_times(i + (j - k) * i, L * coeff(static_cast<std::size_t>(j)) * lev[static_cast<std::size_t>(j)]) +
                         zeta_times((j1 - k) * i, t.kappa[static_cast<std::size_t>(j)] * coeff(static_cast<std::size_t>(j1)) *
                                                      lev[static_cast<std::size_t>(j1)]);
        if (k > 0) {
          const auto& prev = t.R[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
          line += zeta_times((j - k + 1) * i,
                             d_operator(coeff(static_cast<std::size_t>(j)) * prev[static_cast<std::size_t>(j)]));
        }
        line = line.truncated(std::min(line.order(), t.order - 1));
        for (int c = 0; c < 4; ++c) {
          QSeries part(Var::psi, line.order());
          for (int m = 0; m <= line.order(); ++m) part.at(m) = line[m][c];
          r.add_series("row" + std::to_string(i) + ".level" + std::to_string(k) + ".line" + std::to_string(j) +
                           "[zeta^" + std::to_string(c) + "]",
                       part);
        }
      }
    }
  }
  // Rows are Galois conjugate: the normalized tables coincide.
  for (std::size_t k = 0; k < t.R.size(); ++k)
    for (int i = 1; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        r.add_series("galois.row" + std::to_string(i) + ".level" + std::to_string(k) + ".col" + std::to_string(j),
                     t.R[k][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - t.R[k][0][static_cast<std::size_t>(j)]);
  // psi = 0 values: column 0 vanishes at every level k >= 1; other columns
  // are reported.
  nlohmann::ordered_json at0 = nlohmann::ordered_json::array();
  for (std::size_t k = 1; k < t.R.size(); ++k) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    bool nonzero = false;
    for (int j = 0; j < 5; ++j) {
      const Rational& v = t.R[k][0][static_cast<std::size_t>(j)][0];
      row.push_back(v.str());
      if (j == 0)
        r.add("initial.level" + std::to_string(k) + ".col0", 0, v);
      else if (!v.is_zero())
        nonzero = true;
    }
    if (nonzero)
      r.warn("level " + std::to_string(k) + " has nonzero psi = 0 values off column 0: " + row.dump());
    at0.push_back(std::move(row));
  }
  r.data["values_at_psi0"] = std::move(at0);
  r.data["cycle_checked_levels"] = t.cycle_checked_levels;
  r.finalize();
  return r;
}

}  // namespace crepant
