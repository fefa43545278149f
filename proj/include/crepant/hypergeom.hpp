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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "crepant/cohom_series.hpp"
#include "crepant/report.hpp"
#include "crepant/series.hpp"

namespace crepant {

enum class GeometryTag { kp4, c5z5 };

struct Geometry {
  GeometryTag tag = GeometryTag::kp4;

  static Geometry kp4() { return {GeometryTag::kp4}; }
  static Geometry c5z5() { return {GeometryTag::c5z5}; }
  /// Accepts "kp4" or "c5z5".
  static Geometry parse(std::string_view name);

  int delta() const { return tag == GeometryTag::kp4 ? 0 : 1; }
  Var var() const { return tag == GeometryTag::kp4 ? Var::q : Var::psi; }
  const char* name() const { return tag == GeometryTag::kp4 ? "kp4" : "c5z5"; }
  friend bool operator==(Geometry a, Geometry b) { return a.tag == b.tag; }
};

/// (1 + c x^step)^alpha through x^order.
QSeries binomial_series(Var var, const Rational& alpha, const Rational& c, int step, int order);

/// L in closed form: (1+5^5 q)^(-1/5), or -psi (1+psi^5/5^5)^(-1/5).
QSeries l_closed_form(Geometry g, int order);

/// Hypergeometric I-function. KP4 component H^m sits at z^(-m) only; the
/// orbifold keeps z-powers down to -z_order.
CohomSeries i_function(Geometry g, int x_order, int z_order);

/// Coefficient of 1/z in the I-function (its H or phi_1 component).
QSeries mirror_map(Geometry g, int order);

struct LeadingTerm {
  int component = 0;
  QSeries value;
};

/// The z^0 coefficient of F, which must sit on a single basis element.
LeadingTerm leading_term(const CohomSeries& F);

/// One application of F -> zD(F / F(x, infinity)). For KP4 the omitted
/// factor q^(H/z) contributes an extra H * (F / F(x, infinity)), H^5 = 0.
CohomSeries birkhoff_step(const CohomSeries& F, Geometry g);

struct HGData {
  Geometry geometry;
  int order = 0;
  std::array<QSeries, 5> C;
  QSeries C5;  ///< Leading term after a fifth step (orbifold only).
  QSeries L, X, Y, DX, D2X, D3X;
  std::array<QSeries, 4> B;  ///< B_1..B_4
  QSeries mirror;
  /// F_0 = I, F_{i+1} = birkhoff_step(F_i), at the internal order.
  std::vector<CohomSeries> chain;
};

/// Requires order >= 6.
HGData compute_hg_data(Geometry g, int order);

/// Shared, memoized compute_hg_data.
std::shared_ptr<const HGData> hg_data(Geometry g, int order);

VerificationReport check_relations(const HGData& d);

}  // namespace crepant
