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

#include <array>
#include <ostream>
#include <string>

#include "crepant/rational.hpp"

namespace crepant {

/// Element a0 + a1*z + a2*z^2 + a3*z^3 of Q(z), z a primitive fifth root of
/// unity, reduced modulo 1 + z + z^2 + z^3 + z^4.
class Cyclotomic5 {
 public:
  using Coeffs = std::array<Rational, 4>;

  Cyclotomic5() = default;
  Cyclotomic5(const Rational& r) : c_{r, 0, 0, 0} {}  // NOLINT(implicit)
  template <std::integral I>
  Cyclotomic5(I n) : Cyclotomic5(Rational(n)) {}  // NOLINT(implicit)
  explicit Cyclotomic5(Coeffs c) : c_(std::move(c)) {}

  const Coeffs& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational part; only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  /// Image under the automorphism z -> z^k (k coprime to 5).
  Cyclotomic5 galois(int k) const;
  Cyclotomic5 norm_conjugate() const;
  Rational norm() const;
  Cyclotomic5 pow(int e) const;

  Cyclotomic5& operator+=(const Cyclotomic5& o);
  Cyclotomic5& operator-=(const Cyclotomic5& o);
  Cyclotomic5& operator*=(const Cyclotomic5& o);
  Cyclotomic5& operator/=(const Cyclotomic5& o);

  friend Cyclotomic5 operator+(Cyclotomic5 a, const Cyclotomic5& b) { return a += b; }
  friend Cyclotomic5 operator-(Cyclotomic5 a, const Cyclotomic5& b) { return a -= b; }
  friend Cyclotomic5 operator*(Cyclotomic5 a, const Cyclotomic5& b) { return a *= b; }
  friend Cyclotomic5 operator/(Cyclotomic5 a, const Cyclotomic5& b) { return a /= b; }
  friend Cyclotomic5 operator-(const Cyclotomic5& a);
  friend bool operator==(const Cyclotomic5& a, const Cyclotomic5& b) = default;

  /// "[a0, a1, a2, a3]" with each entry in p/q form.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic5& a) { return os << a.str(); }

 private:
  Coeffs c_{};
};

/// z^(k mod 5) for any integer k.
Cyclotomic5 zeta_power(int k);

/// Multiplicative inverse; throws DivisionByZero on 0.
Cyclotomic5 cyc_inverse(const Cyclotomic5& a);

inline Cyclotomic5 inv(const Cyclotomic5& a) { return cyc_inverse(a); }

}  // namespace crepant
