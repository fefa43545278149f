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

#include "crepant/bernoulli.hpp"
#include "crepant/error.hpp"
#include "crepant/rmatrix_orb.hpp"

using namespace crepant;

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

}  // namespace

TEST_SUITE("rmatrix-orb") {
  TEST_CASE("prefactor") {
    for (int i = 0; i < 5; ++i) {
      const auto p = orb_prefactor(i, 4);
      CHECK(p[0] == Rational(1));
      for (int n = 1; n <= 4; ++n) CHECK(p[u(n)].is_zero());
    }
    CHECK(orb_prefactor(0, 5)[5] == Rational(1, 252));
    CHECK(orb_prefactor(1, 5)[5] == Rational(5) * bernoulli_poly(6, Rational(1, 5)) / Rational(6) / Rational(5));
    const auto p2 = orb_prefactor(2, 5);
    CHECK(p2[5] == bernoulli_poly(6, Rational(2, 5)) / Rational(6));
  }

  TEST_CASE("level structure") {
    const OrbRTable t = solve_e2(3, 10);
    REQUIRE(t.R.size() == 4);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        CHECK(t.R[0][u(i)][u(j)] == t.R[0][u(i)][0]);
        CHECK(t.R[0][u(i)][u(j)][0] == Rational(1));
        CHECK(t.R[1][u(i)][u(j)][0].is_zero());
      }
    // Rows agree as rational series: the Galois substitution is trivial on them.
    for (int k = 0; k <= 3; ++k)
      for (int i = 1; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(t.R[u(k)][u(i)][u(j)] == t.R[u(k)][0][u(j)]);
  }

  TEST_CASE("un-normalized recursion lines vanish") {
    const OrbRTable t = solve_e2(3, 10);
    for (int k = 1; k <= 3; ++k)
      for (int j = 0; j < 5; ++j) {
        const int jn = (j + 1) % 5;
        const QSeries lhs = t.R[u(k)][0][u(jn)] - t.R[u(k)][0][u(j)];
        const QSeries rhs = series_div(-d_operator(t.n[u(j)] * t.R[u(k - 1)][0][u(j)]),
                                       t.kappa[u(j)] * t.n[u(jn)]);
        const int o = std::min(lhs.order(), rhs.order());
        CHECK(lhs.truncated(o) == rhs.truncated(o));
      }
  }

  TEST_CASE("assembled matrix") {
    const RMatrixOrb m = assemble_orb_r_matrix(2, 8, true);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        CHECK(m.entry[u(i)][u(j)][0] == CycSeries::constant(Var::psi, Cyclotomic5(1), m.entry[u(i)][u(j)][0].order()));
        CHECK(m.entry[u(i)][u(j)][1][0].is_zero());
      }
  }

  TEST_CASE("residual report") {
    const VerificationReport r = check_e2_residuals(solve_e2(6, 12));
    CHECK(r.status != Status::fail);
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve_e2(-1, 10), Error);
    CHECK_THROWS_AS(orb_prefactor(5, 5), Error);
  }
}
