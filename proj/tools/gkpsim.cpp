// Copyright 2026 The gkpcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// gkpsim: tabulates GKP code performance as CSV.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11/CLI11.hpp"
#include "gkpcode/gkpcode.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

struct GridFlags {
  std::optional<double> min, max;
  std::optional<std::size_t> points;
  bool log = false;
  bool linear = false;

  gkp::SigmaGrid resolve(gkp::SigmaGrid def) const {
    if (min) def.min = *min;
    if (max) def.max = *max;
    if (points) def.points = *points;
    if (log) def.log = true;
    if (linear) def.log = false;
    return def;
  }
};

struct Flags {
  GridFlags grid;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::size_t shards = 1;
  std::vector<std::string> gkp_db;
  std::string out;
  bool meta = false;
  bool inject = false;
};

void add_grid(CLI::App* cmd, Flags& f) {
  cmd->add_option("--sigma-min", f.grid.min, "Smallest input noise sigma");
  cmd->add_option("--sigma-max", f.grid.max, "Largest input noise sigma");
  cmd->add_option("--points", f.grid.points, "Number of sigma grid points")->check(CLI::Range(2, 100000));
  auto* lg = cmd->add_flag("--log", f.grid.log, "Log-spaced sigma grid");
  cmd->add_flag("--linear", f.grid.linear, "Linearly spaced sigma grid")->excludes(lg);
}

void add_mc(CLI::App* cmd, Flags& f, std::uint64_t default_trials) {
  f.trials = default_trials;
  cmd->add_option("--trials", f.trials, "Monte Carlo trials per grid point")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Random seed (default: $GKPSIM_SEED, else 1)");
  cmd->add_option("--shards", f.shards, "Worker threads per Monte Carlo run")->capture_default_str()->check(CLI::Range(1, 1024));
}

void add_out(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.out, "Output CSV path (default: stdout)");
  cmd->add_flag("--meta", f.meta, "Also write <out>.meta with the run configuration");
}

void add_db(CLI::App* cmd, Flags& f) {
  cmd->add_option("--gkp-db", f.gkp_db, "GKP ancilla squeezing in dB, repeatable; 'inf' for ideal ancillas");
}

std::uint64_t resolve_seed(const Flags& f) {
  if (f.seed) return *f.seed;
  if (const char* env = std::getenv("GKPSIM_SEED"); env && *env) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || env[0] == '-') {
      throw CLI::ValidationError("GKPSIM_SEED", std::string("not an unsigned integer: ") + env);
    }
    return v;
  }
  return 1;
}

std::vector<double> resolve_db(const Flags& f) {
  if (f.gkp_db.empty()) return gkp::default_fig8_db();
  std::vector<double> out;
  for (const auto& s : f.gkp_db) {
    if (s == "inf" || s == "Inf" || s == "INF") {
      out.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || !std::isfinite(v) || v <= 0) {
      throw CLI::ValidationError("--gkp-db", "expected a positive number or 'inf', got '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

int emit(const gkp::Table& t, const Flags& f) {
  if (f.out.empty()) {
    gkp::write_csv(std::cout, t);
    return kExitOk;
  }
  std::ofstream os(f.out, std::ios::binary);
  if (!os) {
    std::cerr << "gkpsim: cannot open " << f.out << " for writing\n";
    return kExitConfig;
  }
  gkp::write_csv(os, t);
  if (f.meta) {
    std::ofstream ms(f.out + ".meta", std::ios::binary);
    ms << "experiment=" << t.experiment << "\n"
       << "version=" << GKPCODE_VERSION << "\n"
       << "schema=" << gkp::kCsvSchema << "\n";
    for (const auto& [k, v] : t.meta) ms << k << "=" << v << "\n";
    ms << "shards=" << f.shards << "\n"
       << "rows=" << t.rows.size() << "\n";
  }
  return os ? kExitOk : kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate and analyse GKP stabilizer codes for Gaussian noise", "gkpsim"};
  app.set_version_flag("--version", GKPCODE_VERSION);
  app.require_subcommand(1);

  Flags f;
  auto* fig3 = app.add_subcommand("fig3", "GKP-repetition logical noise, analytic and Monte Carlo");
  add_grid(fig3, f);
  add_mc(fig3, f, 1'000'000);
  add_out(fig3, f);

  auto* fig45 = app.add_subcommand("fig45", "Optimal two-mode-squeezing gain and logical noise");
  add_grid(fig45, f);
  add_out(fig45, f);

  auto* fig8 = app.add_subcommand("fig8", "QEC gain with finite-squeezing GKP ancillas");
  add_grid(fig8, f);
  add_db(fig8, f);
  add_out(fig8, f);

  auto* appd = app.add_subcommand("appendix-d", "Squeezed-repetition scaling of logical noise");
  add_grid(appd, f);
  add_mc(appd, f, 1'000'000);
  add_out(appd, f);

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo check of the optimal two-mode-squeezing code");
  add_grid(sweep, f);
  add_db(sweep, f);
  add_mc(sweep, f, 100'000);
  add_out(sweep, f);

  auto* checks = app.add_subcommand("checks", "Structural identities and normalizations");
  checks->add_flag("--inject-nonsymplectic", f.inject, "Add a non-symplectic matrix (negative control)");
  checks->add_option("--seed", f.seed, "Random seed (default: $GKPSIM_SEED, else 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    const gkp::McConfig mc{f.trials, resolve_seed(f), f.shards};
    if (fig3->parsed()) {
      return emit(gkp::fig3_table(f.grid.resolve({0.02, 0.6, 30, false}), mc), f);
    }
    if (fig45->parsed()) {
      return emit(gkp::fig45_table(f.grid.resolve({0.01, 0.6, 100, true})), f);
    }
    if (fig8->parsed()) {
      return emit(gkp::fig8_table(f.grid.resolve({0.01, 0.7, 70, true}), resolve_db(f)), f);
    }
    if (appd->parsed()) {
      return emit(gkp::appendix_d_table(f.grid.resolve({0.01, 0.05, 5, true}), mc), f);
    }
    if (sweep->parsed()) {
      return emit(gkp::sweep_table(f.grid.resolve({0.05, 0.5, 10, false}), resolve_db(f), mc), f);
    }
    if (checks->parsed()) {
      const auto results = gkp::run_checks({f.inject, 1000, resolve_seed(f)});
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " worst=" << gkp::format_number(r.worst)
                  << " tol=" << gkp::format_number(r.tolerance) << "\n";
        ok = ok && r.pass;
      }
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "gkpsim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gkpsim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "gkpsim: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "gkpsim: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfig;
}
