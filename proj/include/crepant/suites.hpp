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

#include <random>
#include <string>
#include <vector>

#include "crepant/diffring.hpp"
#include "crepant/report.hpp"
#include "crepant/rmatrix_kp4.hpp"

namespace crepant {

struct RunConfig {
  int order = 20;        ///< x-order for the relation checks
  int z_order = 6;       ///< K for the R-matrix checks
  int crc_order = 25;    ///< psi-order for the constancy check
  int exploratory = 0;   ///< extra z-orders reported without being asserted
  std::string fault;     ///< "", "bernoulli" or "root"
  int jobs = 1;
};

struct RunResult {
  std::vector<VerificationReport> reports;
  int exit_code = 0;
};

/// Random element with up to max_terms monomials, L-degree in [min_l, 3].
DiffRingElem random_element(Geometry g, std::mt19937_64& rng, int max_terms = 4, int min_l = -2);
Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 6);

/// The published R_11..R_16 (row 1 of the KP4 table), index p-1.
std::vector<LPoly> published_r1();

VerificationReport suite_arith(const std::string& fault = {});
VerificationReport suite_series(int order = 15);
VerificationReport suite_leibniz(int pairs = 200);
VerificationReport suite_eval_intertwining(int order = 15, int samples = 50);
VerificationReport suite_t_intertwining(int samples = 100);
VerificationReport suite_m_restrict();
VerificationReport check_r1_table(int P = 6);
/// Symbolic first-line residuals, pure-L row 1, and a q-series re-check to `order`.
VerificationReport check_e1(int P, int order = 15);

RunResult run_all(const RunConfig& cfg);

}  // namespace crepant
