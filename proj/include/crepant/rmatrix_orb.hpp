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
#include "crepant/series.hpp"

namespace crepant {

using Row5 = std::array<QSeries, 5>;

struct OrbRTable {
  int K = 0;
  int order = 0;
  int hg_order = 0;
  /// R[k][i][j]: normalized level-k entry, a series in psi.
  std::vector<std::array<Row5, 5>> R;
  /// Normalizations: R^k_ij = n[j] zeta^((j-k) i) R~^k_ij.
  Row5 n;
  /// Connection coefficients C_1, C_2, C_3, C_2, C_1.
  Row5 kappa;
  /// Leading coefficient of the cycle residual per checked level (all zero on success).
  std::vector<int> cycle_checked_levels;
};

/// Solves the flatness system level by level through z^K at psi-order `order`.
/// hg_order < 0 picks order + 2(K+1) + 6.
OrbRTable solve_e2(int K, int order, int hg_order = -1);

/// exp(5 sum_k (-1)^(k+1) B_{5k+1}(i/5)/(5k+1) z^(5k)/(5k)) through z^K.
std::vector<Rational> orb_prefactor(int i, int K);

struct RMatrixOrb {
  int K = 0;
  int order = 0;
  bool with_prefactor = true;
  /// entry[i][j][n]: z^n coefficient of entry (i, j).
  std::array<std::array<std::vector<CycSeries>, 5>, 5> entry;
};

RMatrixOrb assemble_orb_r_matrix(const OrbRTable& t, bool with_prefactor = true);
RMatrixOrb assemble_orb_r_matrix(int K, int order, bool with_prefactor = true);

/// Every un-normalized flatness line for every row and level, plus the
/// psi = 0 diagnostics (warn only).
VerificationReport check_e2_residuals(const OrbRTable& t);

}  // namespace crepant
