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

#include "crepant/bernoulli.hpp"

#include <string>

#include "crepant/error.hpp"

namespace crepant {
namespace {

std::vector<Rational> binomial_row(int n) {
  std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
  mpz_class c = 1;
  for (int j = 0; j <= n; ++j) {
    row[static_cast<std::size_t>(j)] = Rational(c, 1);
    c = c * (n - j) / (j + 1);
  }
  return row;
}

}  // namespace

BernoulliTable::BernoulliTable(const BernoulliTable& other) {
  std::lock_guard lock(other.mu_);
  numbers_ = other.numbers_;
  rows_ = other.rows_;
  overrides_ = other.overrides_;
}

void BernoulliTable::extend_locked(int m) const {
  while (static_cast<int>(numbers_.size()) <= m) {
    const int n = static_cast<int>(numbers_.size());
    if (n == 0) {
      numbers_.emplace_back(1);
      continue;
    }
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    const auto binom = binomial_row(n + 1);
    Rational s;
    for (int j = 0; j < n; ++j) s += binom[static_cast<std::size_t>(j)] * numbers_[static_cast<std::size_t>(j)];
    numbers_.push_back(-s / Rational(n + 1));
  }
}

Rational BernoulliTable::number(int m) const {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "bernoulli_number: negative index");
  std::lock_guard lock(mu_);
  if (auto it = overrides_.find(m); it != overrides_.end()) return it->second;
  extend_locked(m);
  return numbers_[static_cast<std::size_t>(m)];
}

std::vector<Rational> BernoulliTable::poly_coefficients(int m) const {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "bernoulli_poly: negative index");
  {
    std::lock_guard lock(mu_);
    if (auto it = rows_.find(m); it != rows_.end()) return it->second;
  }
  const auto binom = binomial_row(m);
  std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j)
    row[static_cast<std::size_t>(m - j)] = binom[static_cast<std::size_t>(j)] * number(j);
  std::lock_guard lock(mu_);
  return rows_.try_emplace(m, std::move(row)).first->second;
}

Rational BernoulliTable::poly(int m, const Rational& x) const {
  const auto row = poly_coefficients(m);
  Rational acc;
  for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void BernoulliTable::override_number(int m, const Rational& value) {
  std::lock_guard lock(mu_);
  overrides_[m] = value;
  rows_.clear();
}

const BernoulliTable& default_bernoulli() {
  static const BernoulliTable table;
  return table;
}

Rational bernoulli_number(int m) { return default_bernoulli().number(m); }

Rational bernoulli_poly(int m, const Rational& x) { return default_bernoulli().poly(m, x); }

Rational n_constant(int k, const Cyclotomic5& root) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "n_constant: k must be positive");
  Cyclotomic5 sum(Rational(-1, 5).pow(k));
  for (int i = 1; i <= 4; ++i) sum += cyc_inverse(Cyclotomic5(1) - root.pow(i)).pow(k);
  if (!sum.is_rational())
    throw Error(ErrorCode::Internal,
                "n_constant(" + std::to_string(k) + "): zeta components do not cancel: " + sum.str());
  return sum.rational_part();
}

}  // namespace crepant
