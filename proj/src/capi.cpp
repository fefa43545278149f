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

#include "crepant/crepant.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "crepant/bernoulli.hpp"
#include "crepant/frobenius.hpp"
#include "crepant/hypergeom.hpp"
#include "crepant/rmatrix_kp4.hpp"
#include "crepant/rmatrix_orb.hpp"
#include "crepant/suites.hpp"
#include "crepant/verify.hpp"

struct crepant_session {
  std::string last_error;
};

namespace {

using namespace crepant;
using json = nlohmann::ordered_json;

crepant_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return CREPANT_E_INVALID_ARGUMENT;
    case ErrorCode::DivisionByZero: return CREPANT_E_DIVISION_BY_ZERO;
    case ErrorCode::NonInvertible: return CREPANT_E_NON_INVERTIBLE;
    case ErrorCode::WrongGeometry: return CREPANT_E_WRONG_GEOMETRY;
    case ErrorCode::NonUnitLeadingTerm: return CREPANT_E_NON_UNIT_LEADING_TERM;
    case ErrorCode::InsufficientOrder: return CREPANT_E_INSUFFICIENT_ORDER;
    case ErrorCode::InconsistentSystem: return CREPANT_E_INCONSISTENT_SYSTEM;
    case ErrorCode::ConsistencyFailure: return CREPANT_E_CONSISTENCY_FAILURE;
    case ErrorCode::Internal: return CREPANT_E_INTERNAL;
  }
  return CREPANT_E_INTERNAL;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
crepant_status guarded(crepant_session* s, char** out, F&& body) {
  if (!s) return CREPANT_E_INVALID_ARGUMENT;
  if (!out) {
    s->last_error = "output pointer is NULL";
    return CREPANT_E_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    *out = dup(body());
    s->last_error.clear();
    return CREPANT_OK;
  } catch (const Error& e) {
    s->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    s->last_error = "out of memory";
    return CREPANT_E_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return CREPANT_E_INTERNAL;
  }
}

std::string series_text(const std::string& name, const QSeries& q) {
  std::ostringstream os;
  os << name << " =";
  bool any = false;
  for (int n = 0; n <= q.order(); ++n) {
    if (q[n].is_zero()) continue;
    os << (any ? " + " : " ") << "(" << q[n].str() << ")";
    if (n > 0) os << "*" << to_string(q.var()) << "^" << n;
    any = true;
  }
  if (!any) os << " 0";
  os << " + O(" << to_string(q.var()) << "^" << q.order() + 1 << ")\n";
  return os.str();
}

std::string bundle(const std::vector<VerificationReport>& reports, crepant_format fmt, bool timings, int* passed) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.status != Status::fail;
  if (passed) *passed = ok ? 1 : 0;
  if (fmt == CREPANT_FORMAT_JSON) {
    json j;
    j["tool"] = "crepant";
    j["version"] = crepant_version();
    j["status"] = ok ? "pass" : "fail";
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, timings));
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::string s;
  int fails = 0, warns = 0;
  for (const auto& r : reports) {
    s += render_text(r, timings);
    fails += r.status == Status::fail;
    warns += r.status == Status::warn;
  }
  s += std::string("overall: ") + (ok ? "pass" : "fail") + " (" + std::to_string(reports.size()) + " checks, " +
       std::to_string(fails) + " failed, " + std::to_string(warns) + " warnings)\n";
  return s;
}

template <class F>
VerificationReport timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = f();
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

extern "C" {

const char* crepant_version(void) { return "0.1.0"; }

const char* crepant_status_string(crepant_status status) {
  switch (status) {
    case CREPANT_OK: return "ok";
    case CREPANT_E_INVALID_ARGUMENT: return "invalid argument";
    case CREPANT_E_DIVISION_BY_ZERO: return "division by zero";
    case CREPANT_E_NON_INVERTIBLE: return "non-invertible";
    case CREPANT_E_WRONG_GEOMETRY: return "wrong geometry";
    case CREPANT_E_NON_UNIT_LEADING_TERM: return "non-unit leading term";
    case CREPANT_E_INSUFFICIENT_ORDER: return "insufficient order";
    case CREPANT_E_INCONSISTENT_SYSTEM: return "inconsistent system";
    case CREPANT_E_CONSISTENCY_FAILURE: return "consistency failure";
    case CREPANT_E_INTERNAL: return "internal error";
    case CREPANT_E_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

crepant_status crepant_session_create(crepant_session** out) {
  if (!out) return CREPANT_E_INVALID_ARGUMENT;
  *out = new (std::nothrow) crepant_session();
  return *out ? CREPANT_OK : CREPANT_E_OUT_OF_MEMORY;
}

void crepant_session_destroy(crepant_session* session) { delete session; }

const char* crepant_last_error(const crepant_session* session) {
  return session ? session->last_error.c_str() : "null session";
}

void crepant_string_free(char* s) { std::free(s); }

crepant_status crepant_n_constant(crepant_session* s, int k, char** out) {
  return guarded(s, out, [&] { return n_constant(k).str(); });
}

crepant_status crepant_bernoulli_poly(crepant_session* s, int m, const char* x, char** out) {
  return guarded(s, out, [&] {
    if (!x) throw Error(ErrorCode::InvalidArgument, "x is NULL");
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 0");
    return bernoulli_poly(m, Rational::parse(x)).str();
  });
}

crepant_status crepant_series(crepant_session* s, const char* geometry, int order, const char* emit,
                              crepant_format fmt, char** out) {
  return guarded(s, out, [&] {
    if (!geometry) throw Error(ErrorCode::InvalidArgument, "geometry is NULL");
    const Geometry g = Geometry::parse(geometry);
    const auto d = hg_data(g, order);
    std::vector<std::pair<std::string, QSeries>> all{
        {"c0", d->C[0]}, {"c1", d->C[1]}, {"c2", d->C[2]}, {"c3", d->C[3]}, {"c4", d->C[4]},
        {"l", d->L},     {"x", d->X},     {"y", d->Y},     {"mirror", d->mirror},
        {"b1", d->B[0]}, {"b2", d->B[1]}, {"b3", d->B[2]}, {"b4", d->B[3]},
    };
    std::vector<std::pair<std::string, QSeries>> chosen;
    for (auto& e : all)
      if (!emit || e.first == emit) chosen.push_back(e);
    if (chosen.empty()) throw Error(ErrorCode::InvalidArgument, std::string("unknown series '") + emit + "'");
    if (fmt == CREPANT_FORMAT_JSON) {
      json j;
      j["geometry"] = g.name();
      j["order"] = order;
      json ser = json::object();
      for (const auto& [name, q] : chosen) ser[name] = to_json(q);
      j["series"] = std::move(ser);
      return j.dump(2) + "\n";
    }
    std::string text = std::string("# ") + g.name() + ", order " + std::to_string(order) + "\n";
    for (const auto& [name, q] : chosen) text += series_text(name, q);
    return text;
  });
}

crepant_status crepant_rmatrix(crepant_session* s, const char* geometry, int z_order, int order, int with_prefactor,
                               crepant_format fmt, char** out) {
  return guarded(s, out, [&] {
    if (!geometry) throw Error(ErrorCode::InvalidArgument, "geometry is NULL");
    if (z_order < 0) throw Error(ErrorCode::InvalidArgument, "z-order must be >= 0");
    const Geometry g = Geometry::parse(geometry);
    json j;
    std::ostringstream text;
    j["geometry"] = g.name();
    j["z_order"] = z_order;
    j["with_prefactor"] = with_prefactor != 0;
    json entries = json::array();
    if (g.tag == GeometryTag::kp4) {
      const RMatrixKP4 m = assemble_r_matrix(z_order, with_prefactor != 0);
      text << "# kp4 R-matrix through z^" << z_order << (with_prefactor ? "" : " (raw)") << "\n";
      for (int i = 0; i < 5; ++i) {
        json row = json::array();
        for (int jj = 0; jj < 5; ++jj) {
          json col = json::array();
          for (int n = 0; n <= z_order; ++n) {
            const ZetaScaled& e = m.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)][static_cast<std::size_t>(n)];
            col.push_back({{"zeta_exp", e.zeta_exp}, {"value", e.value.to_json()}});
            text << "(" << i << "," << jj << ") z^" << n << ": zeta^" << e.zeta_exp << " * [" << e.value.str() << "]\n";
          }
          row.push_back(std::move(col));
        }
        entries.push_back(std::move(row));
      }
    } else {
      j["order"] = order;
      const RMatrixOrb m = assemble_orb_r_matrix(z_order, order, with_prefactor != 0);
      text << "# c5z5 R-matrix through z^" << z_order << ", psi-order " << order << (with_prefactor ? "" : " (raw)")
           << "\n";
      for (int i = 0; i < 5; ++i) {
        json row = json::array();
        for (int jj = 0; jj < 5; ++jj) {
          json col = json::array();
          for (int n = 0; n <= z_order; ++n) {
            const CycSeries& e = m.entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)][static_cast<std::size_t>(n)];
            json coeffs = json::array();
            text << "(" << i << "," << jj << ") z^" << n << ":";
            bool any = false;
            for (int p = 0; p <= e.order(); ++p) {
              coeffs.push_back(to_json(e[p]));
              if (!e[p].is_zero()) {
                text << " psi^" << p << "*" << e[p].str();
                any = true;
              }
            }
            if (!any) text << " 0";
            text << "\n";
            col.push_back({{"var", "psi"}, {"order", e.order()}, {"coeffs", std::move(coeffs)}});
          }
          row.push_back(std::move(col));
        }
        entries.push_back(std::move(row));
      }
    }
    j["entries"] = std::move(entries);
    return fmt == CREPANT_FORMAT_JSON ? j.dump(2) + "\n" : text.str();
  });
}

crepant_status crepant_frobenius(crepant_session* s, int order, const char* check, crepant_format fmt, int timings,
                                 char** out, int* passed) {
  return guarded(s, out, [&] {
    const std::string c = check ? check : "";
    if (!c.empty() && c != "associativity" && c != "correlators" && c != "idempotents")
      throw Error(ErrorCode::InvalidArgument, "unknown frobenius check '" + c + "'");
    std::vector<VerificationReport> reps;
    if (c.empty() || c == "associativity") reps.push_back(timed([&] { return check_associativity(order); }));
    if (c.empty() || c == "correlators") reps.push_back(timed([&] { return check_correlators(order); }));
    if (c.empty() || c == "idempotents") reps.push_back(timed([&] { return check_idempotents(order); }));
    return bundle(reps, fmt, timings != 0, passed);
  });
}

crepant_status crepant_verify(crepant_session* s, int z_order, int order, int exploratory, const char* check,
                              crepant_format fmt, int timings, char** out, int* passed) {
  return guarded(s, out, [&] {
    const std::string c = check ? check : "";
    if (!c.empty() && c != "prop1" && c != "crc")
      throw Error(ErrorCode::InvalidArgument, "unknown verify check '" + c + "'");
    std::vector<VerificationReport> reps;
    if (c.empty() || c == "prop1") reps.push_back(timed([&] { return verify_prop1(z_order, exploratory); }));
    if (c.empty() || c == "crc") reps.push_back(timed([&] { return verify_crc(z_order, order); }));
    return bundle(reps, fmt, timings != 0, passed);
  });
}

void crepant_run_options_init(crepant_run_options* opts) {
  if (!opts) return;
  const RunConfig d;
  opts->order = d.order;
  opts->z_order = d.z_order;
  opts->crc_order = d.crc_order;
  opts->exploratory = d.exploratory;
  opts->jobs = d.jobs;
  opts->timings = 0;
  opts->fault = nullptr;
}

crepant_status crepant_run_all(crepant_session* s, const crepant_run_options* opts, crepant_format fmt, char** out,
                               int* passed) {
  return guarded(s, out, [&] {
    RunConfig cfg;
    if (opts) {
      cfg.order = opts->order;
      cfg.z_order = opts->z_order;
      cfg.crc_order = opts->crc_order;
      cfg.exploratory = opts->exploratory;
      cfg.jobs = opts->jobs;
      if (opts->fault) cfg.fault = opts->fault;
    }
    if (cfg.order < 6 || cfg.z_order < 0 || cfg.crc_order < 1 || cfg.jobs < 1)
      throw Error(ErrorCode::InvalidArgument, "run options out of range");
    if (!cfg.fault.empty() && cfg.fault != "bernoulli" && cfg.fault != "root")
      throw Error(ErrorCode::InvalidArgument, "unknown fault '" + cfg.fault + "'");
    const RunResult r = run_all(cfg);
    return bundle(r.reports, fmt, opts && opts->timings, passed);
  });
}

}  // extern "C"
