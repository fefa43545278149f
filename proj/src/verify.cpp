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

#include "crepant/verify.hpp"

#include "crepant/diffring.hpp"
#include "crepant/hypergeom.hpp"
#include "crepant/rmatrix_orb.hpp"

namespace crepant {

AConstants a_constants(const RTableKP4& t) {
  AConstants a;
  a.K = t.P;
  for (int i = 0; i < 5; ++i)
    for (const auto& e : t.R[static_cast<std::size_t>(i)]) a.a[static_cast<std::size_t>(i)].push_back(m_restrict(e));
  return a;
}

AConstants a_constants(int K) { return a_constants(chain_rows(K)); }

namespace {

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= n && j < static_cast<int>(b.size()); ++j)
      r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return r;
}

nlohmann::ordered_json rationals(const std::vector<Rational>& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

}  // namespace

VerificationReport verify_prop1(int K, int exploratory) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "verify_prop1: K must be >= 0");
  VerificationReport r("prop1");
  const int top = std::max(K, exploratory);
  r.params = {{"z_order", K}, {"exploratory_orders", exploratory}};
  r.note("assumption: z-degree K is read as genus K/2 (K = 2g)");
  const AConstants a = a_constants(top);
  const std::vector<Rational> pre = kp4_prefactor(top);
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (int i = 0; i < 5; ++i) {
    const auto& ai = a.a[static_cast<std::size_t>(i)];
    const std::vector<Rational> lhs = poly_mul(pre, ai, top);
    const std::vector<Rational> rhs = orb_prefactor(i, top);
    for (int n = 0; n <= top; ++n)
      r.add("row" + std::to_string(i), n, lhs[static_cast<std::size_t>(n)] - rhs[static_cast<std::size_t>(n)], n <= K);
    if (K >= 1) r.add("a1-3/20.row" + std::to_string(i), 1, ai[1] - Rational(3, 20));
    table.push_back(rationals(ai));
  }
  r.data["a"] = std::move(table);
  r.finalize();
  return r;
}

VerificationReport verify_crc(int K, int order) {
  if (K < 0 || order < 1) throw Error(ErrorCode::InvalidArgument, "verify_crc: need K >= 0 and order >= 1");
  VerificationReport r("crc");
  r.params = {{"z_order", K}, {"order", order}};
  const RTableKP4 kp = chain_rows(K);
  const OrbRTable orb = solve_e2(K, order);

  int shift = 0;
  for (const auto& row : kp.R)
    for (const auto& e : row) shift = std::max(shift, -e.min_l());
  const auto d = hg_data(Geometry::c5z5(), std::max(order + shift, 6));

  // ratio[j][k]: w^k coefficient of T(sum_p R_jp w^p) / (sum_k R~^k_0j w^k).
  std::array<std::vector<QSeries>, 5> ratio;
  for (int j = 0; j < 5; ++j) {
    auto& rat = ratio[static_cast<std::size_t>(j)];
    for (int k = 0; k <= K; ++k) {
      QSeries s = eval_series(transform_T(kp.R[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]), *d, order);
      for (int m = 0; m < k; ++m)
        s -= rat[static_cast<std::size_t>(m)] * orb.R[static_cast<std::size_t>(k - m)][0][static_cast<std::size_t>(j)];
      // R~^0 = 1, so no division is needed.
      rat.push_back(s);
      QSeries tail = s;
      tail.at(0) = Rational(0);
      r.add_series("col" + std::to_string(j) + ".w" + std::to_string(k), tail);
    }
  }
  std::vector<Rational> rho;
  for (int k = 0; k <= K; ++k) {
    rho.push_back(ratio[0][static_cast<std::size_t>(k)][0]);
    for (int j = 1; j < 5; ++j)
      r.add("col" + std::to_string(j) + "-col0.w" + std::to_string(k), 0,
            ratio[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)][0] - rho.back());
  }
  r.data["ratio"] = rationals(rho);

  // A(z) is diagonal: A_ii(z) = [P_kp4(w) rho(w) / P_orb,i(w)] with w = z / zeta^i.
  const std::vector<Rational> pk = kp4_prefactor(K);
  nlohmann::ordered_json mats = nlohmann::ordered_json::array();
  for (int n = 0; n <= K; ++n) mats.push_back(nlohmann::ordered_json::array());
  for (int i = 0; i < 5; ++i) {
    const std::vector<Rational> num = poly_mul(pk, rho, K);
    QSeries nz(Var::z, num), dz(Var::z, orb_prefactor(i, K));
    const QSeries q = series_div(nz, dz);
    for (int n = 0; n <= K; ++n) {
      nlohmann::ordered_json e;
      e["row"] = i;
      e["zeta_exp"] = ((-i * n) % 5 + 5) % 5;
      e["value"] = q[n].str();
      mats[static_cast<std::size_t>(n)].push_back(std::move(e));
    }
  }
  r.data["A"] = std::move(mats);
  r.note("A_n is diagonal; entry (i,i) is zeta^zeta_exp * value");
  r.finalize();
  return r;
}

}  // namespace crepant
