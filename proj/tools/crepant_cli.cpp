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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "crepant/crepant.h"

namespace {

struct Options {
  std::string geometry = "kp4";
  int order = 20;
  int z_order = 6;
  int crc_order = 25;
  int exploratory = 0;
  int jobs = 1;
  std::string format = "text";
  std::string out;
  std::string emit;
  std::string check;
  std::string fault;
  bool raw = false;
  bool with_prefactor = false;
  bool timings = false;
};

int emit_output(const Options& o, const char* text) {
  if (o.out.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) {
    std::cerr << "crepant: cannot open '" << o.out << "' for writing\n";
    return 2;
  }
  f << text;
  return f ? 0 : 1;
}

// Exit 0 pass, 1 fail, 2 usage.
int finish(crepant_session* s, const Options& o, crepant_status st, char* text, int passed) {
  if (st != CREPANT_OK) {
    std::cerr << "crepant: " << crepant_status_string(st) << ": " << crepant_last_error(s) << "\n";
    return st == CREPANT_E_INVALID_ARGUMENT ? 2 : 1;
  }
  const int w = emit_output(o, text);
  crepant_string_free(text);
  if (w != 0) return w;
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact crepant-resolution verification for local P4 and [C5/Z5]", "crepant"};
  app.require_subcommand(1);
  app.set_version_flag("--version", crepant_version());

  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", o.out, "Write output to PATH instead of stdout");
  };

  auto* series = app.add_subcommand("series", "Hypergeometric series of one geometry");
  series->add_option("--geometry", o.geometry)->check(CLI::IsMember({"kp4", "c5z5"}));
  series->add_option("--order", o.order, "Truncation order")->check(CLI::Range(6, 1000));
  series->add_option("--emit", o.emit, "Emit one series")
      ->check(CLI::IsMember({"c0", "c1", "c2", "c3", "c4", "l", "x", "y", "mirror", "b1", "b2", "b3", "b4"}));
  common(series);

  auto* rmatrix = app.add_subcommand("rmatrix", "R-matrix entries");
  rmatrix->add_option("--geometry", o.geometry)->check(CLI::IsMember({"kp4", "c5z5"}));
  rmatrix->add_option("--z-order", o.z_order, "Highest z power")->check(CLI::Range(0, 12));
  rmatrix->add_option("--order", o.order, "psi-order (c5z5 only)")->check(CLI::Range(1, 1000));
  auto* raw = rmatrix->add_flag("--raw", o.raw, "Omit the prefactor");
  rmatrix->add_flag("--with-prefactor", o.with_prefactor, "Include the prefactor (default)")->excludes(raw);
  common(rmatrix);

  auto* frob = app.add_subcommand("frobenius", "Orbifold Frobenius structure checks");
  frob->add_option("--order", o.order, "psi-order")->check(CLI::Range(1, 1000));
  frob->add_option("--check", o.check)->check(CLI::IsMember({"associativity", "correlators", "idempotents"}));
  frob->add_flag("--timings", o.timings, "Report wall times");
  common(frob);

  auto* verify = app.add_subcommand("verify", "Genus-expansion identity and ratio constancy checks");
  verify->add_option("--z-order", o.z_order)->check(CLI::Range(0, 12));
  verify->add_option("--order", o.crc_order, "psi-order of the constancy check")->check(CLI::Range(1, 1000));
  verify->add_option("--exploratory-orders", o.exploratory, "Extra z-orders, reported only")
      ->check(CLI::Range(0, 6));
  verify->add_option("--check", o.check)->check(CLI::IsMember({"prop1", "crc"}));
  verify->add_flag("--timings", o.timings, "Report wall times");
  common(verify);

  auto* all = app.add_subcommand("all", "Run every suite");
  all->add_option("--order", o.order, "x-order of the relation checks")->check(CLI::Range(6, 1000));
  all->add_option("--z-order", o.z_order)->check(CLI::Range(0, 12));
  all->add_option("--crc-order", o.crc_order, "psi-order of the constancy check")->check(CLI::Range(1, 1000));
  all->add_option("--exploratory-orders", o.exploratory, "Extra z-orders, reported only")->check(CLI::Range(0, 6));
  all->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  all->add_flag("--timings", o.timings, "Report wall times");
  all->add_option("--inject-fault", o.fault)->check(CLI::IsMember({"bernoulli", "root"}))->group("");
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  crepant_session* s = nullptr;
  if (crepant_session_create(&s) != CREPANT_OK) {
    std::cerr << "crepant: out of memory\n";
    return 1;
  }
  const crepant_format fmt = o.format == "json" ? CREPANT_FORMAT_JSON : CREPANT_FORMAT_TEXT;
  char* text = nullptr;
  int passed = 1;
  crepant_status st = CREPANT_OK;

  if (*series) {
    st = crepant_series(s, o.geometry.c_str(), o.order, o.emit.empty() ? nullptr : o.emit.c_str(), fmt, &text);
  } else if (*rmatrix) {
    if (!rmatrix->count("--order")) o.order = 10;
    st = crepant_rmatrix(s, o.geometry.c_str(), o.z_order, o.order, o.raw ? 0 : 1, fmt, &text);
  } else if (*frob) {
    if (!frob->count("--order")) o.order = 15;
    st = crepant_frobenius(s, o.order, o.check.empty() ? nullptr : o.check.c_str(), fmt, o.timings, &text, &passed);
  } else if (*verify) {
    st = crepant_verify(s, o.z_order, o.crc_order, o.exploratory, o.check.empty() ? nullptr : o.check.c_str(), fmt,
                        o.timings, &text, &passed);
  } else {
    crepant_run_options ro;
    crepant_run_options_init(&ro);
    ro.order = o.order;
    ro.z_order = o.z_order;
    ro.crc_order = o.crc_order;
    ro.exploratory = o.exploratory;
    ro.jobs = o.jobs;
    ro.timings = o.timings ? 1 : 0;
    ro.fault = o.fault.empty() ? nullptr : o.fault.c_str();
    st = crepant_run_all(s, &ro, fmt, &text, &passed);
  }

  const int code = finish(s, o, st, text, passed);
  crepant_session_destroy(s);
  return code;
}
