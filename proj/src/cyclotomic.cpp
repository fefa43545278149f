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

#include "crepant/cyclotomic.hpp"

#include "crepant/error.hpp"

namespace crepant {
namespace {

using Dense = std::array<Rational, 5>;

// z^4 = -(1 + z + z^2 + z^3)
Cyclotomic5::Coeffs reduce(const Dense& d) {
  return {d[0] - d[4], d[1] - d[4], d[2] - d[4], d[3] - d[4]};
}

int mod5(int k) { return ((k % 5) + 5) % 5; }

}  // namespace

bool Cyclotomic5::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Cyclotomic5::is_rational() const {
  return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Cyclotomic5& Cyclotomic5::operator+=(const Cyclotomic5& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic5& Cyclotomic5::operator-=(const Cyclotomic5& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic5& Cyclotomic5::operator*=(const Cyclotomic5& o) {
  if (o.is_rational()) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  Dense prod{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) prod[(i + j) % 5] += c_[i] * o.c_[j];
  }
  c_ = reduce(prod);
  return *this;
}

Cyclotomic5& Cyclotomic5::operator/=(const Cyclotomic5& o) { return *this *= cyc_inverse(o); }

Cyclotomic5 operator-(const Cyclotomic5& a) {
  return Cyclotomic5({-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]});
}

Cyclotomic5 Cyclotomic5::galois(int k) const {
  if (mod5(k) == 0) throw Error(ErrorCode::InvalidArgument, "galois: exponent must be coprime to 5");
  Dense d{};
  for (int j = 0; j < 4; ++j) d[static_cast<std::size_t>(mod5(j * k))] += c_[static_cast<std::size_t>(j)];
  return Cyclotomic5(reduce(d));
}

Cyclotomic5 Cyclotomic5::norm_conjugate() const { return galois(2) * galois(3) * galois(4); }

Rational Cyclotomic5::norm() const {
  const Cyclotomic5 n = *this * norm_conjugate();
  if (!n.is_rational()) throw Error(ErrorCode::Internal, "cyclotomic norm is not rational");
  return n.c_[0];
}

Cyclotomic5 Cyclotomic5::pow(int e) const {
  if (e < 0) return cyc_inverse(*this).pow(-e);
  Cyclotomic5 result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Cyclotomic5::str() const {
  return "[" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ", " + c_[3].str() + "]";
}

Cyclotomic5 zeta_power(int k) {
  Dense d{};
  d[static_cast<std::size_t>(mod5(k))] = 1;
  return Cyclotomic5(reduce(d));
}

Cyclotomic5 cyc_inverse(const Cyclotomic5& a) {
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta5)");
  if (a.is_rational()) return Cyclotomic5(a.rational_part().inverse());
  // a * (s2 s3 s4)(a) is the field norm, a nonzero rational
  const Cyclotomic5 conj = a.norm_conjugate();
  const Cyclotomic5 n = a * conj;
  if (!n.is_rational()) throw Error(ErrorCode::Internal, "cyclotomic norm is not rational");
  return conj * Cyclotomic5(n.rational_part().inverse());
}

}  // namespace crepant
