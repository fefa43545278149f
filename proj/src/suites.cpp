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

#include "crepant/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "crepant/bernoulli.hpp"
#include "crepant/frobenius.hpp"
#include "crepant/hypergeom.hpp"
#include "crepant/rmatrix_orb.hpp"
#include "crepant/verify.hpp"

namespace crepant {

namespace {

void add_cyc(VerificationReport& r, const std::string& where, const Cyclotomic5& v) {
  for (int c = 0; c < 4; ++c) r.add(where + "[zeta^" + std::to_string(c) + "]", c, v[c]);
}

void add_elem(VerificationReport& r, const std::string& where, int power, const DiffRingElem& e) {
  ++r.coefficients_checked;
  for (const auto& [m, c] : e.terms())
    r.residuals.push_back(Residual{where + "{" + m.str() + "}", power, c, true});
}

QSeries random_series(Var v, int order, std::mt19937_64& rng, bool unit) {
  QSeries s(v, order);
  for (int n = 0; n <= order; ++n) s.at(n) = random_rational(rng);
  if (unit && s[0].is_zero()) s.at(0) = Rational(1);
  return s;
}

LPoly lp(const Rational& scale, std::initializer_list<std::pair<int, long>> terms) {
  LPoly p;
  for (const auto& [e, c] : terms) p.emplace(e, scale * Rational(c));
  return p;
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  const int a = num(rng), b = den(rng);
  return Rational(a, b);
}

DiffRingElem random_element(Geometry g, std::mt19937_64& rng, int max_terms, int min_l) {
  std::uniform_int_distribution<int> nterms(1, max_terms), lexp(min_l, 3), small(0, 2);
  DiffRingElem e(g);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    const int l = lexp(rng), x = small(rng), dx = small(rng), d2x = small(rng), y = small(rng);
    e.add_term(Monomial{l, x, dx, d2x, y}, random_rational(rng));
  }
  return e;
}

std::vector<LPoly> published_r1() {
  return {
      lp(Rational(3, 20), {{0, 1}, {4, -1}}),
      lp(Rational(9, 800), {{0, 1}, {4, -2}, {8, 1}}),
      lp(Rational(1, 80000), {{0, 269}, {2, 4288}, {4, -135}, {7, -16128}, {8, 135}, {12, 11571}}),
      lp(Rational(1, 6400000), {{0, 2823}, {1, 137216}, {2, 51456}, {4, -3228}, {6, -2041088}, {7, -193536},
                                {8, 810}, {11, 4322304}, {12, 138852}, {16, -2415609}}),
      lp(Rational(3, 128000000),
         {{0, 50532}, {1, 137216}, {2, 25728}, {4, -2823}, {5, -4634624}, {6, -2041088}, {7, -96768}, {8, 1614},
          {10, 23404672}, {11, 4322304}, {12, 69426}, {15, -34732544}, {16, -2415609}, {20, 15911973}}),
      lp(Rational(1, 25600000000),
         {{0, 4564757},      {1, 6174720},      {2, 4613888},     {4, 4493426178},    {5, -417116160},
          {6, -91848960},    {7, -17353728},    {8, 127035},      {9, -47045380096},  {10, 2106420480},
          {11, 194503680},   {12, 12450396},    {14, 132709674240}, {15, -3125928960}, {16, -108702405},
          {19, -143147676672}, {20, 1432077570}, {24, 52989974037}}),
  };
}

VerificationReport suite_arith(const std::string& fault) {
  VerificationReport r("arith.invariants");
  if (!fault.empty()) r.params = {{"fault", fault}};
  std::mt19937_64 rng(20240501);
  int inverses = 0;
  while (inverses < 200) {
    Cyclotomic5 a(Cyclotomic5::Coeffs{random_rational(rng), random_rational(rng), random_rational(rng),
                                      random_rational(rng)});
    if (a.is_zero()) continue;
    add_cyc(r, "a*inv(a)-1#" + std::to_string(inverses), a * cyc_inverse(a) - Cyclotomic5(1));
    ++inverses;
  }
  Cyclotomic5 sum, prod(1);
  for (int k = 0; k < 5; ++k) sum += zeta_power(k);
  for (int k = 1; k < 5; ++k) prod *= Cyclotomic5(1) - zeta_power(k);
  add_cyc(r, "sum zeta^k", sum);
  add_cyc(r, "prod(1-zeta^k)-5", prod - Cyclotomic5(5));

  BernoulliTable table(default_bernoulli());
  if (fault == "bernoulli") table.override_number(6, Rational(1, 41));
  const std::vector<Rational> xs{Rational(-2), Rational(-1, 3), Rational(0), Rational(1, 5), Rational(2, 7),
                                 Rational(3, 2), Rational(1)};
  for (int m = 0; m <= 12; ++m)
    for (std::size_t s = 0; s < xs.size(); ++s) {
      const Rational& x = xs[s];
      const Rational expect = m == 0 ? Rational(0) : Rational(m) * x.pow(m - 1);
      r.add("B_" + std::to_string(m) + "(x+1)-B_" + std::to_string(m) + "(x)#" + std::to_string(s), m,
            table.poly(m, x + Rational(1)) - table.poly(m, x) - expect);
    }
  for (int m = 0; m <= 24; ++m) {
    if (m >= 3 && m % 2 == 1) r.add("B_odd", m, table.number(m));
    r.add("B_m(0)-B_m", m, table.poly(m, Rational(0)) - table.number(m));
    r.add("B_m(1)-(-1)^m B_m", m, table.poly(m, Rational(1)) - Rational(m % 2 ? -1 : 1) * table.number(m));
  }

  const Cyclotomic5 root = fault == "root" ? Cyclotomic5(2) * zeta_power(1) : zeta_power(1);
  try {
    for (int k = 1; k <= 13; ++k) (void)n_constant(k, root);
    r.add("N_1-9/5", 1, n_constant(1, root) - Rational(9, 5));
    r.add("N_1(zeta^2)-9/5", 1, n_constant(1, zeta_power(2)) - Rational(9, 5));
  } catch (const Error& e) {
    r.fail(std::string("n_constant: ") + to_string(e.code()) + ": " + e.what());
  }
  r.finalize();
  return r;
}

VerificationReport suite_series(int order) {
  VerificationReport r("series.properties");
  r.params = {{"order", order}};
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const QSeries f = random_series(Var::q, order, rng, false);
    const QSeries g = random_series(Var::q, order, rng, true);
    r.add_series("D(fg)", d_operator(f * g) - d_operator(f) * g - f * d_operator(g));
    r.add_series("div(fg,g)", series_div(f * g, g) - f);
    QSeries f0 = f, g0 = g;
    f0.at(0) = Rational(0);
    g0.at(0) = Rational(0);
    r.add_series("exp(f+g)", series_exp(f0 + g0) - series_exp(f0) * series_exp(g0));
    r.add_series("exp(f)exp(-f)", series_exp(f0) * series_exp(-f0) - QSeries::constant(Var::q, Rational(1), order));
  }
  for (Geometry g : {Geometry::kp4(), Geometry::c5z5()}) {
    const QSeries L = l_closed_form(g, order);
    const QSeries L6 = L.pow(6);
    const QSeries dl = g.tag == GeometryTag::kp4 ? (L6 - L) * Rational(1, 5) : L + L6 * Rational(1, 3125);
    r.add_series(std::string("DL.") + g.name(), d_operator(L) - dl);
  }
  const auto d = hg_data(Geometry::c5z5(), order + 6);
  const auto& C = d->C;
  const QSeries num = C[1] * C[1] * C[1] * C[2] * C[2];
  r.add_series("C1^3C2^2/(-L^5)-C1/C3",
               (series_div(num, -d->L.pow(5)) - series_div(C[1], C[3])).truncated(order));
  r.finalize();
  return r;
}

VerificationReport suite_leibniz(int pairs) {
  VerificationReport r("diffring.leibniz");
  r.params = {{"pairs", pairs}};
  std::mt19937_64 rng(11);
  for (Geometry g : {Geometry::kp4(), Geometry::c5z5()})
    for (int t = 0; t < pairs; ++t) {
      const DiffRingElem f = random_element(g, rng, 3), h = random_element(g, rng, 3);
      add_elem(r, std::string(g.name()) + "#" + std::to_string(t), t, derive(f * h) - derive(f) * h - f * derive(h));
    }
  r.finalize();
  return r;
}

VerificationReport suite_eval_intertwining(int order, int samples) {
  VerificationReport r("diffring.eval_intertwining");
  r.params = {{"order", order}, {"samples", samples}};
  std::mt19937_64 rng(13);
  for (Geometry g : {Geometry::kp4(), Geometry::c5z5()}) {
    std::vector<DiffRingElem> elems{DiffRingElem::L(g), DiffRingElem::X(g), DiffRingElem::DX(g),
                                    DiffRingElem::D2X(g), DiffRingElem::Y(g)};
    // L(0) = 0 on the orbifold side, so only L-polynomials evaluate to power series there.
    const int min_l = g.tag == GeometryTag::kp4 ? -2 : 0;
    for (int t = 0; t < samples; ++t) elems.push_back(random_element(g, rng, 3, min_l));
    for (std::size_t t = 0; t < elems.size(); ++t)
      r.add_series(std::string(g.name()) + "#" + std::to_string(t),
                   eval_series(derive(elems[t]), order) - d_operator(eval_series(elems[t], order)));
  }
  r.finalize();
  return r;
}

VerificationReport suite_t_intertwining(int samples) {
  VerificationReport r("diffring.t_intertwining");
  r.params = {{"samples", samples}};
  std::mt19937_64 rng(17);
  const Geometry g = Geometry::kp4();
  std::vector<DiffRingElem> elems{DiffRingElem::L(g), DiffRingElem::X(g), DiffRingElem::DX(g),
                                  DiffRingElem::D2X(g), DiffRingElem::Y(g)};
  for (int t = 0; t < samples; ++t) elems.push_back(random_element(g, rng, 4));
  for (std::size_t t = 0; t < elems.size(); ++t)
    add_elem(r, "#" + std::to_string(t), static_cast<int>(t),
             transform_T(derive(elems[t])) + derive(transform_T(elems[t])) * Rational(1, 5));
  r.finalize();
  return r;
}

VerificationReport suite_m_restrict() {
  VerificationReport r("diffring.m_restrict");
  std::mt19937_64 rng(19);
  const Geometry g = Geometry::kp4();
  for (int t = 0; t < 100; ++t) {
    const DiffRingElem f = random_element(g, rng), h = random_element(g, rng);
    const Rational c = random_rational(rng);
    r.add("linear#" + std::to_string(t), t, m_restrict(f * c + h) - c * m_restrict(f) - m_restrict(h));
    DiffRingElem f0(g);
    for (const auto& [m, v] : f.terms())
      if (m.l == 0) f0.add_term(m, v);
    r.add("multiplicative#" + std::to_string(t), t, m_restrict(f0 * h) - m_restrict(f0) * m_restrict(h));
  }
  r.add("M(1)-1", 0, m_restrict(DiffRingElem(g, Rational(1))) - Rational(1));
  r.finalize();
  return r;
}

VerificationReport check_r1_table(int P) {
  VerificationReport r("kp4.r1_table");
  const std::vector<LPoly> printed = published_r1();
  P = std::min<int>(P, static_cast<int>(printed.size()));
  r.params = {{"P", P}};
  const std::vector<LPoly> Q = solve_q_sequence(P);
  nlohmann::ordered_json mism = nlohmann::ordered_json::array();
  for (int p = 1; p <= P; ++p) {
    LPoly R;
    for (const auto& [e, c] : Q[static_cast<std::size_t>(p)]) R.emplace(e - 1, c);
    const LPoly diff = lpoly_add(R, lpoly_scale(printed[static_cast<std::size_t>(p - 1)], Rational(-1)));
    int top = 0;
    for (const auto& [e, c] : R) top = std::max(top, e);
    for (const auto& [e, c] : printed[static_cast<std::size_t>(p - 1)]) top = std::max(top, e);
    for (int e = 0; e <= top; ++e) {
      auto it = diff.find(e);
      r.add("R_1" + std::to_string(p), e, it == diff.end() ? Rational(0) : it->second);
    }
    const Rational at1 = lpoly_at_one(printed[static_cast<std::size_t>(p - 1)]);
    if (!at1.is_zero())
      r.note("published R_1" + std::to_string(p) + " does not vanish at L = 1: " + at1.str());
  }
  r.finalize();
  return r;
}

VerificationReport check_e1(int P, int order) {
  VerificationReport r("kp4.e1");
  r.params = {{"P", P}, {"order", order}};
  const RTableKP4 t = chain_rows_unchecked(solve_q_sequence(P));
  for (std::size_t p = 0; p < t.residuals.size(); ++p) add_elem(r, "first-line", static_cast<int>(p), t.residuals[p]);
  for (int p = 0; p <= P; ++p)
    if (!t.R[1][static_cast<std::size_t>(p)].l_only()) r.fail("R_1" + std::to_string(p) + " involves X, DX, D2X or Y");

  // Re-check every line on q-series, with D taken on the series.
  const Geometry g = Geometry::kp4();
  const auto d = hg_data(g, std::max(order, 6));
  const QSeries L = d->L.truncated(order);
  const QSeries dl = d_operator(L);
  const QSeries dl_l2 = series_div(dl, L * L);
  const QSeries xl = series_div(d->X.truncated(order), L), yl = series_div(d->Y.truncated(order), L);
  const std::array<QSeries, 5> c{xl - dl_l2, QSeries(Var::q, order), dl_l2 - xl, dl_l2 * Rational(2) - xl - yl,
                                 xl + yl - dl_l2 * Rational(2)};
  std::array<std::vector<QSeries>, 5> ev;
  for (int j = 0; j < 5; ++j)
    for (int p = 0; p <= P; ++p)
      ev[static_cast<std::size_t>(j)].push_back(
          eval_series(t.R[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)], *d, order));
  for (int p = 0; p < P; ++p)
    for (int j = 0; j < 5; ++j) {
      const auto& prev = ev[static_cast<std::size_t>((j + 4) % 5)];
      const QSeries rhs = prev[static_cast<std::size_t>(p + 1)] + c[static_cast<std::size_t>(j)] * prev[static_cast<std::size_t>(p)] +
                          series_div(d_operator(prev[static_cast<std::size_t>(p)]), L);
      r.add_series("series.row" + std::to_string(j) + ".p" + std::to_string(p + 1),
                   ev[static_cast<std::size_t>(j)][static_cast<std::size_t>(p + 1)] - rhs);
    }
  r.finalize();
  return r;
}

RunResult run_all(const RunConfig& cfg) {
  const int K = cfg.z_order;
  std::vector<std::pair<std::string, std::function<VerificationReport()>>> jobs{
      {"arith.invariants", [&] { return suite_arith(cfg.fault); }},
      {"series.properties", [] { return suite_series(15); }},
      {"relations.kp4", [&] { return check_relations(*hg_data(Geometry::kp4(), cfg.order)); }},
      {"relations.c5z5", [&] { return check_relations(*hg_data(Geometry::c5z5(), cfg.order)); }},
      {"diffring.leibniz", [] { return suite_leibniz(200); }},
      {"diffring.eval_intertwining", [] { return suite_eval_intertwining(15, 50); }},
      {"diffring.t_intertwining", [] { return suite_t_intertwining(100); }},
      {"diffring.m_restrict", [] { return suite_m_restrict(); }},
      {"kp4.r1_table", [] { return check_r1_table(6); }},
      {"kp4.e1", [&] { return check_e1(std::max(K, 1), 15); }},
      {"e2.residuals", [&] { return check_e2_residuals(solve_e2(K, cfg.crc_order)); }},
      {"frobenius.associativity", [] { return check_associativity(15); }},
      {"frobenius.correlators", [] { return check_correlators(15); }},
      {"frobenius.idempotents", [] { return check_idempotents(15); }},
      {"prop1", [&] { return verify_prop1(K, cfg.exploratory); }},
      {"crc", [&] { return verify_crc(K, cfg.crc_order); }},
  };
  RunResult out;
  out.reports.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      VerificationReport rep(jobs[i].first);
      try {
        rep = jobs[i].second();
      } catch (const Error& e) {
        rep.fail(std::string(to_string(e.code())) + ": " + e.what());
        rep.finalize();
      } catch (const std::exception& e) {
        rep.fail(e.what());
        rep.finalize();
      }
      rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      out.reports[i] = std::move(rep);
    }
  };
  const int n = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& rep : out.reports)
    if (rep.status == Status::fail) out.exit_code = 1;
  return out;
}

}  // namespace crepant
