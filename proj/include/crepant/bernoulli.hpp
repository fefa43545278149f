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

#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "crepant/cyclotomic.hpp"
#include "crepant/rational.hpp"

namespace crepant {

/// Lazily extended table of Bernoulli numbers (B1 = -1/2) and the coefficient
/// rows of the Bernoulli polynomials. Entries are written once under a lock;
/// lookups return copies, so the table can be shared between threads.
class BernoulliTable {
 public:
  BernoulliTable() = default;
  BernoulliTable(const BernoulliTable& other);
  BernoulliTable& operator=(const BernoulliTable&) = delete;

  Rational number(int m) const;
  /// B_m(x) = sum_j C(m, j) B_j x^(m - j).
  Rational poly(int m, const Rational& x) const;
  /// Coefficients of B_m(x) by ascending power of x.
  std::vector<Rational> poly_coefficients(int m) const;

  /// Replaces B_m in this table (fault injection in test harnesses).
  void override_number(int m, const Rational& value);

 private:
  void extend_locked(int m) const;

  mutable std::mutex mu_;
  mutable std::vector<Rational> numbers_;
  mutable std::map<int, std::vector<Rational>> rows_;
  std::map<int, Rational> overrides_;
};

/// Process-wide table used by the free functions below.
const BernoulliTable& default_bernoulli();

Rational bernoulli_number(int m);
Rational bernoulli_poly(int m, const Rational& x);

/// N_k = (-1/5)^k + sum_{i=1..4} (1 - root^i)^(-k), evaluated in Q(zeta5).
/// The result must be rational; a nonzero irrational part raises Internal.
Rational n_constant(int k, const Cyclotomic5& root = zeta_power(1));

}  // namespace crepant
