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

#include <string>
#include <vector>

#include <json.hpp>

#include "crepant/rational.hpp"
#include "crepant/series.hpp"

namespace crepant {

enum class Status { pass, warn, fail };

const char* to_string(Status s) noexcept;

struct Residual {
  std::string where;
  int power = 0;
  Rational value;
  /// Exploratory residuals only ever downgrade the status to warn.
  bool asserted = true;
};

struct VerificationReport {
  std::string id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::pass;
  std::vector<Residual> residuals;
  std::vector<std::string> notes;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  long coefficients_checked = 0;
  double ms = 0.0;
  bool failed_hard = false;
  bool warned = false;

  explicit VerificationReport(std::string check_id = {}) : id(std::move(check_id)) {}

  void add(std::string where, int power, Rational value, bool asserted = true);
  /// Records every nonzero coefficient of s; zero coefficients only count.
  void add_series(const std::string& where, const QSeries& s, bool asserted = true);
  /// Records every coefficient of s including zeros.
  void add_series_all(const std::string& where, const QSeries& s, bool asserted = true);
  void fail(std::string message);
  void warn(std::string message);
  void note(std::string message) { notes.push_back(std::move(message)); }
  /// Recomputes status from the residuals and flags.
  void finalize();

  bool passed() const { return status == Status::pass || status == Status::warn; }
};

/// Merges sub-reports into one, keeping the worst status.
VerificationReport merge_reports(std::string id, const std::vector<VerificationReport>& parts);

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing);
nlohmann::ordered_json to_json(const QSeries& s);
nlohmann::ordered_json to_json(const Cyclotomic5& c);
std::string render_text(const VerificationReport& r, bool with_timing);

}  // namespace crepant
