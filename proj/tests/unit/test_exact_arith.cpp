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
#include <vector>

#include "crepant/bernoulli.hpp"
#include "crepant/cyclotomic.hpp"
#include "crepant/error.hpp"

using namespace crepant;

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// r = a mod b, q = a div b
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  trim(a);
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  r = a;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Extended Euclid of a against 1 + x + x^2 + x^3 + x^4.
Cyclotomic5 euclid_inverse(const Cyclotomic5& a) {
  Poly r0{1, 1, 1, 1, 1}, r1(a.coeffs().begin(), a.coeffs().end());
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = sub(s0, mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  REQUIRE(r1.size() == 1);
  Poly q, s;
  divmod(s1, Poly{1, 1, 1, 1, 1}, q, s);
  Cyclotomic5::Coeffs c{};
  for (std::size_t i = 0; i < s.size(); ++i) c[i] = s[i] / r1[0];
  return Cyclotomic5(c);
}

Rational binom(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

// Explicit double-sum formula; gives B_1 = +1/2, so only used for m != 1.
Rational bernoulli_oracle(int m) {
  Rational b(0);
  for (int k = 0; k <= m; ++k) {
    Rational inner(0);
    for (int j = 0; j <= k; ++j) inner += Rational(j % 2 ? -1 : 1) * binom(k, j) * Rational(j).pow(m);
    b += inner / Rational(k + 1);
  }
  return b;
}

}  // namespace

TEST_SUITE("exact-arith") {
  TEST_CASE("rational basics") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational::parse("-3/20") == Rational(-3, 20));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
    CHECK_THROWS_AS(Rational::parse("1/x"), Error);
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  }

  TEST_CASE("zeta powers") {
    CHECK(zeta_power(5) == Cyclotomic5(1));
    CHECK(zeta_power(4) == Cyclotomic5({-1, -1, -1, -1}));
    CHECK(zeta_power(-3) == zeta_power(2));
    CHECK(zeta_power(1).pow(5) == Cyclotomic5(1));
  }

  TEST_CASE("inverse examples") {
    CHECK(cyc_inverse(zeta_power(1)) == zeta_power(4));
    CHECK(cyc_inverse(Cyclotomic5(2)) == Cyclotomic5(Rational(1, 2)));
    const Cyclotomic5 a = Cyclotomic5(1) - zeta_power(1);
    const Cyclotomic5 x = cyc_inverse(a);
    CHECK(x == euclid_inverse(a));
    CHECK(a * x == Cyclotomic5(1));
    CHECK(x == Cyclotomic5({Rational(4, 5), Rational(3, 5), Rational(2, 5), Rational(1, 5)}));
    CHECK_THROWS_AS(cyc_inverse(Cyclotomic5()), Error);
  }

  TEST_CASE("200 random inverses against extended Euclid") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    int done = 0;
    while (done < 200) {
      Cyclotomic5::Coeffs c;
      for (auto& x : c) x = Rational(num(rng), den(rng));
      const Cyclotomic5 a(c);
      if (a.is_zero()) continue;
      const Cyclotomic5 x = cyc_inverse(a);
      REQUIRE(a * x == Cyclotomic5(1));
      REQUIRE(x == euclid_inverse(a));
      ++done;
    }
  }

  TEST_CASE("roots of unity sum and product") {
    Cyclotomic5 sum, prod(1);
    for (int k = 0; k < 5; ++k) sum += zeta_power(k);
    for (int k = 1; k < 5; ++k) prod *= Cyclotomic5(1) - zeta_power(k);
    CHECK(sum.is_zero());
    CHECK(prod == Cyclotomic5(5));
  }

  TEST_CASE("galois action and norm") {
    const Cyclotomic5 a({1, 2, 0, -1});
    CHECK(a.galois(1) == a);
    CHECK(a.galois(2).galois(3) == a);
    CHECK(a.norm_conjugate() * a == Cyclotomic5(a.norm()));
  }

  TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    for (int m = 2; m <= 30; ++m) CHECK(bernoulli_number(m) == bernoulli_oracle(m));
  }

  TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(1, Rational(1, 5)) == Rational(-3, 10));
    CHECK(bernoulli_poly(6, Rational(0)) == Rational(1, 42));
    CHECK(bernoulli_poly(2, Rational(1)) == Rational(1, 6));
    for (int m = 0; m <= 16; ++m) {
      const Rational x(3, 7);
      Rational oracle(0);
      for (int k = 0; k <= m; ++k) oracle += binom(m, k) * bernoulli_number(k) * x.pow(m - k);
      CHECK(bernoulli_poly(m, x) == oracle);
    }
  }

  TEST_CASE("bernoulli difference identity") {
    const std::vector<Rational> xs{Rational(0), Rational(1, 5), Rational(-2, 3), Rational(7, 2)};
    for (int m = 1; m <= 12; ++m)
      for (const auto& x : xs)
        CHECK(bernoulli_poly(m, x + Rational(1)) - bernoulli_poly(m, x) == Rational(m) * x.pow(m - 1));
  }

  TEST_CASE("bernoulli override copy") {
    BernoulliTable t(default_bernoulli());
    t.override_number(6, Rational(1, 41));
    CHECK(t.number(6) == Rational(1, 41));
    CHECK(bernoulli_number(6) == Rational(1, 42));
  }

  TEST_CASE("n constants") {
    CHECK(n_constant(1) == Rational(9, 5));
    CHECK(n_constant(1, zeta_power(2)) == Rational(9, 5));
    CHECK(n_constant(2) == Rational(1, 25));
    CHECK(n_constant(3) == Rational(-126, 125));
    for (int k = 1; k <= 13; ++k) {
      Cyclotomic5 s = Cyclotomic5(Rational(-1, 5)).pow(k);
      for (int i = 1; i < 5; ++i) s += euclid_inverse(Cyclotomic5(1) - zeta_power(i)).pow(k);
      REQUIRE(s.is_rational());
      CHECK(n_constant(k) == s.rational_part());
      CHECK(n_constant(k, zeta_power(3)) == n_constant(k));
    }
    CHECK_THROWS_AS(n_constant(0), Error);
  }

  TEST_CASE("n constant with a non-root errors") {
    try {
      (void)n_constant(1, Cyclotomic5(2) * zeta_power(1));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Internal);
    }
  }
}
