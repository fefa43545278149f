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

#include <doctest.h>

#include "crepant/error.hpp"
#include "crepant/hypergeom.hpp"

using namespace crepant;

namespace {

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

bool all_zero(const CohomSeries& s) {
  for (int j = 0; j < 5; ++j)
    for (const auto& [e, q] : s.component(j))
      if (!q.is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("hypergeom") {
  TEST_CASE("geometry tags") {
    CHECK(Geometry::parse("kp4") == Geometry::kp4());
    CHECK(Geometry::c5z5().delta() == 1);
    CHECK(Geometry::kp4().delta() == 0);
    CHECK_THROWS_AS(Geometry::parse("p4"), Error);
  }

  TEST_CASE("L closed forms") {
    const QSeries l = l_closed_form(Geometry::kp4(), 2);
    CHECK(l == QSeries(Var::q, {1, -625, 1171875}));
    // psi * (1 + psi^5/5^5)^(-1/5), read off directly
    const QSeries lo = l_closed_form(Geometry::c5z5(), 11);
    CHECK(lo[1] == Rational(-1));
    CHECK(lo[6] == Rational(1, 15625));
    CHECK(lo[11] == Rational(-3, 25) / Rational(9765625));
    CHECK(lo[2].is_zero());
  }

  TEST_CASE("KP4 I-function coefficients") {
    const CohomSeries I = i_function(Geometry::kp4(), 3, 6);
    CHECK(I.coeff(0, 0)[0] == Rational(1));
    for (int e = -6; e <= 6; ++e) CHECK(I.coeff(0, e)[1].is_zero());
    CHECK(I.coeff(1, -1)[1] == Rational(-120));
    CHECK(mirror_map(Geometry::kp4(), 3)[1] == Rational(-120));
  }

  TEST_CASE("orbifold I-function low terms") {
    const CohomSeries I = i_function(Geometry::c5z5(), 4, 6);
    for (int a = 0; a < 5; ++a) {
      CHECK(I.coeff(a, -a)[a] == Rational(1) / factorial(a));
      for (int b = 0; b <= 4; ++b)
        if (b != a) CHECK(I.coeff(a, -a)[b].is_zero());
    }
  }

  TEST_CASE("orbifold mirror map") {
    const QSeries s = mirror_map(Geometry::c5z5(), 6);
    CHECK(s[0].is_zero());
    CHECK(s[1] == Rational(1));
    for (int n = 2; n <= 5; ++n) CHECK(s[n].is_zero());
    CHECK(s[6] == Rational(-1, 3125) / Rational(720));
    CHECK(s[6] == Rational(-1, 2250000));
  }

  TEST_CASE("Birkhoff steps") {
    CohomSeries c(Var::psi, 5);
    c.set(0, 0, QSeries::constant(Var::psi, Rational(1), 5));
    CHECK(all_zero(birkhoff_step(c, Geometry::c5z5())));

    const auto d = hg_data(Geometry::c5z5(), 12);
    const LeadingTerm lt = leading_term(d->chain[1]);
    CHECK(lt.component == 1);
    CHECK(lt.value.truncated(12) == d->C[1]);
    CHECK(d->C[1][1] == Rational(1));
    for (int n = 2; n <= 5; ++n) CHECK(d->C[1][n].is_zero());

    const auto k = hg_data(Geometry::kp4(), 12);
    CHECK(k->C[2] == k->C[4]);
    CHECK(leading_term(k->chain[2]).component == 2);
  }

  TEST_CASE("relations vanish at order 20") {
    for (Geometry g : {Geometry::kp4(), Geometry::c5z5()}) {
      const auto d = hg_data(g, 20);
      const VerificationReport r = check_relations(*d);
      CHECK(r.passed());
      CHECK(r.residuals.empty());
      CHECK(d->C[0] == QSeries::constant(g.var(), Rational(1), 20));
      const Rational sign = g.delta() ? Rational(-1) : Rational(1);
      CHECK(d->C[1].pow(2) * d->C[2].pow(2) * d->C[3] == d->L.pow(5) * sign);
    }
  }

  TEST_CASE("X constant terms") {
    CHECK(hg_data(Geometry::kp4(), 10)->X[0] == Rational(0));
    CHECK(hg_data(Geometry::c5z5(), 10)->X[0] == Rational(1));
  }

  TEST_CASE("too small order is rejected") {
    CHECK_THROWS_AS(compute_hg_data(Geometry::kp4(), 3), Error);
  }
}
