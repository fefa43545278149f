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

#include "crepant/rmatrix_kp4.hpp"

#include "crepant/bernoulli.hpp"

namespace crepant {

LPoly lpoly_add(const LPoly& a, const LPoly& b) {
  LPoly r = a;
  for (const auto& [e, c] : b) {
    auto [it, fresh] = r.try_emplace(e, c);
    if (fresh) continue;
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }
  return r;
}

LPoly lpoly_scale(const LPoly& a, const Rational& c) {
  LPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : a) r.emplace(e, v * c);
  return r;
}

LPoly lpoly_mul(const LPoly& a, const LPoly& b) {
  LPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r = lpoly_add(r, LPoly{{ea + eb, ca * cb}});
  return r;
}

LPoly lpoly_derive(const LPoly& a) {
  LPoly r;
  for (const auto& [n, c] : a) {
    if (n == 0) continue;
    const Rational k = c * Rational(n, 5);
    r = lpoly_add(r, LPoly{{n + 5, k}, {n, -k}});
  }
  return r;
}

Rational lpoly_at_one(const LPoly& a) {
  Rational s;
  for (const auto& [e, c] : a) s += c;
  return s;
}

DiffRingElem to_diffring(const LPoly& a) {
  DiffRingElem r(Geometry::kp4());
  for (const auto& [e, c] : a) r.add_term(Monomial{e, 0, 0, 0, 0}, c);
  return r;
}

LPoly PFOperator::apply(const LPoly& f) const {
  LPoly r, cur = f;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    r = lpoly_add(r, lpoly_mul(coeffs[k], cur));
    if (k + 1 < coeffs.size()) cur = lpoly_derive(cur);
  }
  return r;
}

namespace {

// a0 + a5 L^5 + a10 L^10 + ...
LPoly lp(std::initializer_list<Rational> c) {
  LPoly r;
  int e = 0;
  for (const auto& x : c) {
    if (!x.is_zero()) r.emplace(e, x);
    e += 5;
  }
  return r;
}

std::array<PFOperator, 5> make_operators() {
  using R = Rational;
  return {{
      {{lp({1, -1}), lp({5})}},
      {{lp({R(4, 5), R(-1, 5), R(-3, 5)}), lp({6, -6}), lp({10})}},
      {{lp({R(12, 25), R(-7, 25), R(-2, 25), R(-3, 25)}), lp({R(22, 5), R(-13, 5), R(-9, 5)}), lp({12, -12}),
        lp({10})}},
      {{lp({R(120, 625), R(-103, 625), R(61, 625), R(-144, 625), R(66, 625)}),
        lp({R(50, 25), R(-41, 25), R(-3, 25), R(-6, 25)}), lp({7, R(-29, 5), R(-6, 5)}), lp({10, -10}), lp({5})}},
      {{lp({R(24, 625), R(-24, 625)}), lp({R(274, 625), R(-274, 625)}), lp({R(9, 5), R(-9, 5)}),
        lp({R(17, 5), R(-17, 5)}), lp({3, -3}), lp({1})}},
  }};
}

Rational get(const LPoly& p, int e) {
  auto it = p.find(e);
  return it == p.end() ? Rational(0) : it->second;
}

// Solves L_1(Q) = rhs for Q supported on [lo, deg]; false if inconsistent.
bool solve_l1(const LPoly& rhs, int lo, int deg, LPoly& q) {
  q.clear();
  if (!rhs.empty() && rhs.rbegin()->first > deg + 5) return false;
  // L_1(L^n) = (1-n) L^n - (1-n) L^(n+5): coefficient of L^n is
  // (1-n) q_n - (6-n) q_{n-5}.
  for (int n = lo; n <= deg + 5; ++n) {
    const Rational known = get(rhs, n) + Rational(6 - n) * get(q, n - 5);
    if (n > deg || n == 1) {
      if (!known.is_zero()) return false;
      continue;
    }
    const Rational v = known / Rational(1 - n);
    if (!v.is_zero()) q.emplace(n, v);
  }
  return true;
}

}  // namespace

const std::array<PFOperator, 5>& pf_operators() {
  static const std::array<PFOperator, 5> ops = make_operators();
  return ops;
}

std::vector<LPoly> solve_q_sequence(int P, int cap) {
  if (P < 0) throw Error(ErrorCode::InvalidArgument, "solve_q_sequence: P must be >= 0");
  if (cap < 0) cap = 5 * P + 5;
  const auto& ops = pf_operators();
  std::vector<LPoly> Q{LPoly{{1, Rational(1)}}};
  for (int p = 1; p <= P; ++p) {
    LPoly rhs;
    for (int m = 1; m <= 4 && p - m >= 0; ++m) {
      LPoly t = ops[static_cast<std::size_t>(m)].apply(Q[static_cast<std::size_t>(p - m)]);
      LPoly shifted;
      for (const auto& [e, c] : t) shifted.emplace(e - m, c);
      rhs = lpoly_add(rhs, shifted);
    }
    rhs = lpoly_scale(rhs, Rational(-1));
    const int lo = std::min(0, rhs.empty() ? 0 : rhs.begin()->first);
    LPoly q;
    bool ok = false;
    for (int deg = 4 * p + 1; deg <= cap; deg += 5) {
      if (solve_l1(rhs, lo, deg, q)) {
        ok = true;
        break;
      }
    }
    if (!ok)
      throw Error(ErrorCode::InconsistentSystem,
                  "no solution for Q_" + std::to_string(p) + " with degree <= " + std::to_string(cap));
    // The kernel of L_1 is spanned by L; fix it by Q_p(L = 1) = 0.
    q = lpoly_add(q, LPoly{{1, -lpoly_at_one(q)}});
    Q.push_back(std::move(q));
  }
  return Q;
}

RTableKP4 chain_rows_unchecked(const std::vector<LPoly>& Q) {
  const Geometry g = Geometry::kp4();
  RTableKP4 t;
  t.P = static_cast<int>(Q.size()) - 1;
  const DiffRingElem one(g, Rational(1));
  const DiffRingElem Linv = DiffRingElem::L(g, -1);
  const DiffRingElem X = DiffRingElem::X(g), Y = DiffRingElem::Y(g);
  const DiffRingElem dl_l2 = generator_derivatives(g)[0] * DiffRingElem::L(g, -2);
  std::array<DiffRingElem, 5> c{
      X * Linv - dl_l2,
      DiffRingElem(g),
      dl_l2 - X * Linv,
      dl_l2 * Rational(2) - X * Linv - Y * Linv,
      X * Linv + Y * Linv - dl_l2 * Rational(2),
  };
  auto step = [&](int j, const DiffRingElem& next_prev, const DiffRingElem& cur_prev) {
    return next_prev + c[static_cast<std::size_t>(j)] * cur_prev + derive(cur_prev) * Linv;
  };
  for (auto& row : t.R) row.push_back(one);
  for (int p = 0; p < t.P; ++p) {
    t.R[1].push_back(to_diffring(Q[static_cast<std::size_t>(p + 1)]) * Linv);
    for (int j : {2, 3, 4, 0}) {
      const auto& prev = t.R[static_cast<std::size_t>((j + 4) % 5)];
      t.R[static_cast<std::size_t>(j)].push_back(
          step(j, prev[static_cast<std::size_t>(p + 1)], prev[static_cast<std::size_t>(p)]));
    }
    const auto& r0 = t.R[0];
    t.residuals.push_back(t.R[1][static_cast<std::size_t>(p + 1)] -
                          step(1, r0[static_cast<std::size_t>(p + 1)], r0[static_cast<std::size_t>(p)]));
  }
  return t;
}

RTableKP4 chain_rows(int P) {
  RTableKP4 t = chain_rows_unchecked(solve_q_sequence(P));
  for (std::size_t p = 0; p < t.residuals.size(); ++p)
    if (!t.residuals[p].is_zero())
      throw Error(ErrorCode::ConsistencyFailure,
                  "first chaining line fails at p = " + std::to_string(p) + ": " + t.residuals[p].str());
  return t;
}

std::vector<Rational> kp4_prefactor(int P) {
  QSeries f(Var::z, std::max(P, 0));
  for (int k = 1; 2 * k - 1 <= P; ++k)
    f.at(2 * k - 1) = -n_constant(2 * k - 1) / Rational(2 * k - 1) * bernoulli_number(2 * k) / Rational(2 * k);
  return series_exp(f).coeffs();
}

RMatrixKP4 assemble_r_matrix(const RTableKP4& t, bool with_prefactor) {
  RMatrixKP4 m;
  m.P = t.P;
  m.with_prefactor = with_prefactor;
  std::vector<Rational> pre = with_prefactor ? kp4_prefactor(t.P) : std::vector<Rational>{Rational(1)};
  pre.resize(static_cast<std::size_t>(t.P) + 1);
  const Geometry g = Geometry::kp4();
  for (int j = 0; j < 5; ++j) {
    // The w-series is row independent; row i rescales z^n by zeta^(-i n).
    std::vector<DiffRingElem> w;
    for (int n = 0; n <= t.P; ++n) {
      DiffRingElem acc(g);
      for (int p = 0; p <= n; ++p)
        acc += t.R[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] * pre[static_cast<std::size_t>(n - p)];
      w.push_back(std::move(acc));
    }
    for (int i = 0; i < 5; ++i)
      for (int n = 0; n <= t.P; ++n)
        m.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(
            ZetaScaled{((-i * n) % 5 + 5) % 5, w[static_cast<std::size_t>(n)]});
  }
  return m;
}

RMatrixKP4 assemble_r_matrix(int P, bool with_prefactor) { return assemble_r_matrix(chain_rows(P), with_prefactor); }

}  // namespace crepant
