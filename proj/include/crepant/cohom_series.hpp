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

#include "crepant/series.hpp"

namespace crepant {

/// Five components (H^0..H^4 or phi_0..phi_4), each a finite sum of z^e times
/// a series in x. Missing (component, e) pairs are zero.
class CohomSeries {
 public:
  CohomSeries(Var var, int order) : var_(var), order_(order) {}

  Var var() const { return var_; }
  int order() const { return order_; }

  /// Coefficient of z^e in component j; a zero series if absent.
  QSeries coeff(int j, int e) const;
  void set(int j, int e, QSeries s);
  void add(int j, int e, const QSeries& s);

  const std::map<int, QSeries>& component(int j) const { return comps_.at(static_cast<std::size_t>(j)); }

  int min_z_power() const;
  int max_z_power() const;
  /// Drops z^e for e < -depth.
  CohomSeries truncated_z(int depth) const;
  /// Lowers every stored series to the common order.
  CohomSeries truncated(int order) const;

 private:
  Var var_;
  int order_;
  std::array<std::map<int, QSeries>, 5> comps_;
};

}  // namespace crepant
