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

#include "crepant/report.hpp"

#include <cstdio>
#include <sstream>

namespace crepant {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::pass: return "pass";
    case Status::warn: return "warn";
    case Status::fail: return "fail";
  }
  return "fail";
}

void VerificationReport::add(std::string where, int power, Rational value, bool asserted) {
  ++coefficients_checked;
  residuals.push_back(Residual{std::move(where), power, std::move(value), asserted});
}

void VerificationReport::add_series(const std::string& where, const QSeries& s, bool asserted) {
  for (int n = 0; n <= s.order(); ++n) {
    ++coefficients_checked;
    if (!s[n].is_zero()) residuals.push_back(Residual{where, n, s[n], asserted});
  }
}

void VerificationReport::add_series_all(const std::string& where, const QSeries& s, bool asserted) {
  for (int n = 0; n <= s.order(); ++n) add(where, n, s[n], asserted);
}

void VerificationReport::fail(std::string message) {
  failed_hard = true;
  notes.push_back("error: " + message);
}

void VerificationReport::warn(std::string message) {
  warned = true;
  notes.push_back("warning: " + message);
}

void VerificationReport::finalize() {
  bool bad = failed_hard;
  bool soft = warned;
  for (const auto& r : residuals) {
    if (r.value.is_zero()) continue;
    if (r.asserted)
      bad = true;
    else
      soft = true;
  }
  status = bad ? Status::fail : (soft ? Status::warn : Status::pass);
}

VerificationReport merge_reports(std::string id, const std::vector<VerificationReport>& parts) {
  VerificationReport out(std::move(id));
  nlohmann::ordered_json children = nlohmann::ordered_json::array();
  for (const auto& p : parts) {
    out.ms += p.ms;
    out.coefficients_checked += p.coefficients_checked;
    if (p.status == Status::fail) out.failed_hard = true;
    if (p.status == Status::warn) out.warned = true;
    for (const auto& r : p.residuals)
      out.residuals.push_back(Residual{p.id + ":" + r.where, r.power, r.value, r.asserted});
    for (const auto& n : p.notes) out.notes.push_back(p.id + ": " + n);
    children.push_back({{"id", p.id}, {"status", to_string(p.status)}});
  }
  out.data["parts"] = std::move(children);
  out.finalize();
  return out;
}

nlohmann::ordered_json to_json(const QSeries& s) {
  nlohmann::ordered_json c = nlohmann::ordered_json::array();
  for (const auto& x : s.coeffs()) c.push_back(x.str());
  return {{"var", std::string(to_string(s.var()))}, {"order", s.order()}, {"coeffs", std::move(c)}};
}

nlohmann::ordered_json to_json(const Cyclotomic5& v) {
  nlohmann::ordered_json c = nlohmann::ordered_json::array();
  for (const auto& x : v.coeffs()) c.push_back(x.str());
  return c;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["coefficients_checked"] = r.coefficients_checked;
  nlohmann::ordered_json res = nlohmann::ordered_json::array();
  for (const auto& x : r.residuals) {
    nlohmann::ordered_json e;
    e["where"] = x.where;
    e["power"] = x.power;
    e["value"] = x.value.str();
    if (!x.asserted) e["exploratory"] = true;
    res.push_back(std::move(e));
  }
  j["residuals"] = std::move(res);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.data.empty()) j["data"] = r.data;
  if (with_timing) j["ms"] = r.ms;
  return j;
}

std::string render_text(const VerificationReport& r, bool with_timing) {
  std::ostringstream os;
  os << "[" << to_string(r.status) << "] " << r.id;
  if (!r.params.empty()) os << " " << r.params.dump();
  os << "  (" << r.coefficients_checked << " coefficients";
  if (with_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ", %.1f ms", r.ms);
    os << buf;
  }
  os << ")\n";
  std::size_t shown = 0;
  for (const auto& x : r.residuals) {
    if (x.value.is_zero()) continue;
    if (++shown > 20) {
      os << "    ...\n";
      break;
    }
    os << "    " << x.where << " @" << x.power << " = " << x.value.str() << (x.asserted ? "" : " (exploratory)")
       << "\n";
  }
  for (const auto& n : r.notes) os << "    " << n << "\n";
  return os.str();
}

}  // namespace crepant
