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
#include <map>
#include <vector>

#include "crepant/cyclotomic.hpp"
#include "crepant/diffring.hpp"

namespace crepant {

/// Laurent polynomial in L: exponent -> coefficient, no zero entries.
using LPoly = std::map<int, Rational>;

LPoly lpoly_add(const LPoly& a, const LPoly& b);
LPoly lpoly_scale(const LPoly& a, const Rational& c);
LPoly lpoly_mul(const LPoly& a, const LPoly& b);
/// D on Q[L, 1/L] with D L = (L^6 - L)/5.
LPoly lpoly_derive(const LPoly& a);
Rational lpoly_at_one(const LPoly& a);
DiffRingElem to_diffring(const LPoly& a);

/// sum_k coeffs[k](L) D^k
struct PFOperator {
  std::vector<LPoly> coeffs;
  LPoly apply(const LPoly& f) const;
};

/// The operators L_1..L_5 (index 0..4).
const std::array<PFOperator, 5>& pf_operators();

/// Q_0..Q_P. cap < 0 selects 5P + 5.
std::vector<LPoly> solve_q_sequence(int P, int cap = -1);

struct RTableKP4 {
  int P = 0;
  /// R[j][p], j = 0..4, p = 0..P.
  std::array<std::vector<DiffRingElem>, 5> R;
  /// First-line residual for p = 0..P-1.
  std::vector<DiffRingElem> residuals;
};

/// Rows 2, 3, 4, 0 from row 1; never throws on a nonzero residual.
RTableKP4 chain_rows_unchecked(const std::vector<LPoly>& Q);
/// Throws ConsistencyFailure if the first line does not close.
RTableKP4 chain_rows(int P);

/// Coefficients of exp(-sum_k N_{2k-1}/(2k-1) B_{2k}/(2k) w^(2k-1)) through w^P.
std::vector<Rational> kp4_prefactor(int P);

/// zeta^zeta_exp * value
struct ZetaScaled {
  int zeta_exp = 0;
  DiffRingElem value{Geometry::kp4()};
};

struct RMatrixKP4 {
  int P = 0;
  bool with_prefactor = true;
  /// entry[i][j][n] is the z^n coefficient of entry (i, j).
  std::array<std::array<std::vector<ZetaScaled>, 5>, 5> entry;
};

RMatrixKP4 assemble_r_matrix(const RTableKP4& t, bool with_prefactor = true);
RMatrixKP4 assemble_r_matrix(int P, bool with_prefactor = true);

}  // namespace crepant
