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
#include <vector>

#include "crepant/report.hpp"
#include "crepant/rmatrix_kp4.hpp"

namespace crepant {

struct AConstants {
  int K = 0;
  /// a[i][k] = M(R_ik)
  std::array<std::vector<Rational>, 5> a;
};

AConstants a_constants(const RTableKP4& t);
AConstants a_constants(int K);

/// Compares exp(-sum N_{2k-1}/(2k-1) B_{2k}/(2k) z^(2k-1)) sum_k a^i_k z^k with
/// the orbifold prefactor for every row through z^K; powers K+1..exploratory
/// are reported without being asserted.
VerificationReport verify_prop1(int K, int exploratory = 0);

/// T(R^KP4) against R^orb: the ratio in w = z / zeta^i must be constant in psi
/// through z^K and psi^order. Emits the constant matrices.
VerificationReport verify_crc(int K, int order);

}  // namespace crepant
