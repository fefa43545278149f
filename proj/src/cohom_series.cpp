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

#include "crepant/cohom_series.hpp"

#include <limits>

namespace crepant {

QSeries CohomSeries::coeff(int j, int e) const {
  const auto& m = comps_.at(static_cast<std::size_t>(j));
  auto it = m.find(e);
  if (it == m.end()) return QSeries(var_, order_);
  return it->second;
}

void CohomSeries::set(int j, int e, QSeries s) {
  if (s.var() != var_) throw Error(ErrorCode::InvalidArgument, "cohomology series variable mismatch");
  if (s.order() > order_) s = s.truncated(order_);
  auto& m = comps_.at(static_cast<std::size_t>(j));
  if (s.is_zero() && s.order() >= order_) {
    m.erase(e);
    return;
  }
  m.insert_or_assign(e, std::move(s));
}

void CohomSeries::add(int j, int e, const QSeries& s) {
  auto& m = comps_.at(static_cast<std::size_t>(j));
  auto it = m.find(e);
  if (it == m.end()) {
    set(j, e, s);
  } else {
    set(j, e, it->second + s);
  }
}

int CohomSeries::min_z_power() const {
  int r = std::numeric_limits<int>::max();
  for (const auto& m : comps_)
    if (!m.empty()) r = std::min(r, m.begin()->first);
  return r == std::numeric_limits<int>::max() ? 0 : r;
}

int CohomSeries::max_z_power() const {
  int r = std::numeric_limits<int>::min();
  for (const auto& m : comps_)
    if (!m.empty()) r = std::max(r, m.rbegin()->first);
  return r == std::numeric_limits<int>::min() ? 0 : r;
}

CohomSeries CohomSeries::truncated_z(int depth) const {
  CohomSeries r(var_, order_);
  for (int j = 0; j < 5; ++j)
    for (const auto& [e, s] : comps_[static_cast<std::size_t>(j)])
      if (e >= -depth) r.comps_[static_cast<std::size_t>(j)].emplace(e, s);
  return r;
}

CohomSeries CohomSeries::truncated(int order) const {
  CohomSeries r(var_, order);
  for (int j = 0; j < 5; ++j)
    for (const auto& [e, s] : comps_[static_cast<std::size_t>(j)]) r.set(j, e, s.truncated(order));
  return r;
}

}  // namespace crepant
