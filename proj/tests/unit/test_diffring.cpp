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

#include <random>

#include "crepant/diffring.hpp"
#include "crepant/error.hpp"
#include "crepant/suites.hpp"

using namespace crepant;

namespace {

const Geometry K = Geometry::kp4();
const Geometry O = Geometry::c5z5();

DiffRingElem c(Geometry g, Rational v) { return DiffRingElem(g, v); }

}  // namespace

TEST_SUITE("diffring") {
  TEST_CASE("canonical form") {
    DiffRingElem a = DiffRingElem::L(K) + DiffRingElem::X(K);
    a -= DiffRingElem::X(K);
    CHECK(a == DiffRingElem::L(K));
    CHECK((DiffRingElem::L(K) - DiffRingElem::L(K)).is_zero());
    CHECK(DiffRingElem::L(K, 2) * DiffRingElem::L(K, -2) == c(K, 1));
    CHECK_THROWS_AS(DiffRingElem::L(K) + DiffRingElem::L(O), Error);
  }

  TEST_CASE("derivation examples") {
    CHECK(derive(DiffRingElem::L(K)) == (DiffRingElem::L(K, 6) - DiffRingElem::L(K)) * Rational(1, 5));
    CHECK(derive(c(K, 7)).is_zero());
    CHECK(derive(c(O, Rational(-2, 3))).is_zero());
    const auto& gd = generator_derivatives(K);
    const DiffRingElem xy = DiffRingElem::X(K) * DiffRingElem::Y(K);
    CHECK(derive(xy) == DiffRingElem::DX(K) * DiffRingElem::Y(K) + DiffRingElem::X(K) * gd[4]);
    CHECK(derive(DiffRingElem::X(O)) == DiffRingElem::DX(O));
    CHECK(derive(DiffRingElem::D2X(O)) == generator_derivatives(O)[3]);
  }

  TEST_CASE("derivation evaluates like D") {
    for (Geometry g : {K, O}) {
      const QSeries l = eval_series(DiffRingElem::L(g), 15);
      CHECK(eval_series(derive(DiffRingElem::L(g)), 15) == d_operator(l).truncated(15));
      const QSeries y = eval_series(DiffRingElem::Y(g), 15);
      CHECK(eval_series(derive(DiffRingElem::Y(g)), 15) == d_operator(y).truncated(15));
    }
  }

  TEST_CASE("Leibniz on random pairs") {
    std::mt19937_64 rng(11);
    for (Geometry g : {K, O}) {
      for (int i = 0; i < 40; ++i) {
        const DiffRingElem a = random_element(g, rng);
        const DiffRingElem b = random_element(g, rng);
        REQUIRE(derive(a * b) == derive(a) * b + a * derive(b));
        REQUIRE(derive(a + b) == derive(a) + derive(b));
      }
    }
  }

  TEST_CASE("transformation T") {
    CHECK(transform_T(DiffRingElem::L(K)) == DiffRingElem::L(O) * Rational(-1, 5));
    const DiffRingElem l2x = DiffRingElem::L(K, 2) * DiffRingElem::X(K);
    CHECK(transform_T(l2x) == DiffRingElem::L(O, 2) * DiffRingElem::X(O) * Rational(-1, 125));
    CHECK(transform_T(c(K, 1)) == c(O, 1));
    CHECK(transform_T(DiffRingElem::D2X(K)) == DiffRingElem::D2X(O) * Rational(-1, 125));
    CHECK_THROWS_AS(transform_T(c(O, 1)), Error);
  }

  TEST_CASE("T intertwines D with a -1/5 scale") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      const DiffRingElem f = random_element(K, rng);
      REQUIRE(transform_T(derive(f)) == derive(transform_T(f)) * Rational(-1, 5));
    }
  }

  TEST_CASE("restriction M") {
    const DiffRingElem r11 = (c(K, 1) - DiffRingElem::L(K, 4)) * Rational(3, 20);
    CHECK(m_restrict(r11) == Rational(3, 20));
    CHECK(m_restrict(DiffRingElem::L(K, -1) * DiffRingElem::X(K)) == Rational(0));
    CHECK(m_restrict(c(K, 1)) == Rational(1));
    CHECK(m_restrict(DiffRingElem::X(K) * DiffRingElem::Y(K)) == Rational(1, 25));
    CHECK(m_restrict(DiffRingElem::DX(K) + c(K, 2)) == Rational(2));
    CHECK_THROWS_AS(m_restrict(c(O, 1)), Error);
  }

  TEST_CASE("evaluation") {
    CHECK(eval_series(DiffRingElem::L(K), 2) == QSeries(Var::q, {1, -625, 1171875}));
    CHECK(eval_series(DiffRingElem::X(K) * Rational(0) + c(K, 7), 5) == QSeries::constant(Var::q, Rational(7), 5));
    const QSeries l = eval_series(DiffRingElem::L(K), 10);
    CHECK(eval_series(DiffRingElem::L(K, -2), 10) == series_div(QSeries::constant(Var::q, Rational(1), 10), l * l));
    CHECK_THROWS_AS(eval_series(DiffRingElem::L(O, -1), 10), Error);
  }

  TEST_CASE("third derivative of X evaluates consistently") {
    for (Geometry g : {K, O}) {
      const QSeries x = eval_series(DiffRingElem::X(g), 14);
      CHECK(eval_series(generator_derivatives(g)[3], 12) == d_operator(d_operator(d_operator(x))).truncated(12));
    }
  }
}
