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

#include "crepant/cohom_series.hpp"
#include "crepant/report.hpp"
#include "crepant/series.hpp"

namespace crepant {

using Vec5 = std::array<QSeries, 5>;
/// t[a][b][c]
using Tensor3 = std::array<std::array<Vec5, 5>, 5>;
using CycVec5 = std::array<CycSeries, 5>;

/// eta(phi_i, phi_j) = 1/5 if i + j = 0 mod 5, else 0.
Rational metric(int i, int j);

/// M^k(I) / C_k for the orbifold.
CohomSeries s_operator(int k, int order);

/// Closed-form genus-zero three-point correlators.
Tensor3 three_point_correlators(int order);
/// The same tensor rebuilt from the Birkhoff chain: phi_1 * phi_k from the
/// z^0 part of zD S(phi_k), other products by associativity.
Tensor3 correlators_from_birkhoff(int order);

/// phi_i * phi_j in the phi basis, from the closed-form correlators.
Vec5 quantum_product(int i, int j, int order);

struct OrbFrobenius {
  int order = 0;
  /// product[i][j][k]: coefficient of phi_k in phi_i * phi_j.
  Tensor3 product;
  /// phi~_i = nu[i] phi_i
  Vec5 nu;
};

OrbFrobenius frobenius_structure(int order);

struct Idempotents {
  int order = 0;
  /// e[alpha][i]: coefficient of phi_i in e_alpha.
  std::array<CycVec5, 5> e;
  /// psi[alpha][i] = eta(5 e_alpha, phi_i)
  std::array<CycVec5, 5> psi;
  /// du^alpha / dpsi
  CycVec5 du;
};

Idempotents idempotents_and_coordinates(int order);

VerificationReport check_associativity(int order);
VerificationReport check_correlators(int order);
VerificationReport check_idempotents(int order);

}  // namespace crepant
