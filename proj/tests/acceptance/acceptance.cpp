// Copyright 2026 The gexit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "commands.hpp"
#include "gexit/distributions.hpp"
#include "gexit/evt.hpp"
#include "gexit/exitsim.hpp"
#include "gexit/grid.hpp"
#include "gexit/residual.hpp"
#include "gexit/stats.hpp"

using namespace gexit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome a1_exit_law() {
  cli::RunConfig c = cli::defaults_for(cli::Subcommand::exit_experiment);
  c.workers = workers();
  std::ostringstream out, err;
  const int code = cli::cmd_exit_experiment(c, out, err);
  if (code != cli::kPass && code != cli::kCheckFailed) {
    return {false, "exit code " + std::to_string(code) + ": " + err.str()};
  }
  const json j = json::parse(out.str());
  const double ks = j["ks_statistic"];
  const double z = j["acceptance_rate_z"];
  const bool pass = ks <= 0.03 && std::abs(z) <= 3.0;
  return {pass, fmt("ks=%.5f (<= 0.03)", ks) + fmt(" attempts=%.0f", j["attempts"].get<double>()) +
                    fmt(" rate=%.5f", j["acceptance_rate"].get<double>()) +
                    fmt(" z=%.2f (|z| <= 3)", z)};
}

Outcome a2_density() {
  const auto xs = make_grid(-1.0, 5.0, 1e-3);
  const auto sup = [&](double r) {
    double s = 0.0;
    for (double x : xs) s = std::max(s, std::abs(shifted_density(r, x) - gumbel_density(x)));
    return s;
  };
  const double s20 = sup(20.0), s40 = sup(40.0);
  return {s20 <= 0.01 && s40 <= 0.5 * s20,
          fmt("sup(r=20)=%.4e (<= 0.01)", s20) + fmt(" sup(r=40)=%.4e", s40) +
              fmt(" ratio=%.3f (<= 0.5)", s40 / s20)};
}

Outcome a3_pathwise() {
  const double beta = 1.0, a = 1.0, h = 1e-4;
  const double eps[] = {1e-1, 1e-2, 1e-3};
  std::vector<double> worst(3, 0.0), mean(3, 0.0);
  int used = 0;
  for (std::uint64_t seed = 1; used < 100 && seed < 10000; ++seed) {
    RngStream rng(seed, 3);
    const NoiseRealization noise = make_noise_realization(beta, h, rng);
    const double gap = std::abs(-a + noise.I_infinity);
    if (!(gap > 0.1)) continue;
    const double limit = -std::log(gap) / beta;
    for (int k = 0; k < 3; ++k) {
      ExitProblem p = ExitProblem::make(beta, eps[k], a, h);
      const double err = std::abs(duhamel_exit_time(noise, p).normalized_time - limit);
      worst[k] = std::max(worst[k], err);
      mean[k] += err;
    }
    ++used;
  }
  for (double& m : mean) m /= used;
  const bool pass = used == 100 && mean[1] < mean[0] && mean[2] < mean[1] &&
                    worst[1] < worst[0] && worst[2] < worst[1] && worst[2] <= 0.05;
  return {pass, "seeds=" + std::to_string(used) + fmt(" max_err=%.3e/", worst[0]) +
                    fmt("%.3e/", worst[1]) + fmt("%.3e (<= 0.05)", worst[2]) +
                    fmt(" mean_err=%.3e/", mean[0]) + fmt("%.3e/", mean[1]) +
                    fmt("%.3e", mean[2])};
}

Outcome a4_gnedenko() {
  const TailModel g = gaussian_model();
  const auto s2 = solve_normalizers(g, 100);
  const auto s8 = solve_normalizers(g, 100000000);
  double worst = 0.0, worst_x = 0.0;
  bool pointwise = true;
  for (double x : make_grid(-1.0, 2.0, 1e-3)) {
    const double lim = std::exp(-x);
    const double e2 = std::abs(gnedenko_lhs(g, s2, x) - lim) / lim;
    const double e8 = std::abs(gnedenko_lhs(g, s8, x) - lim) / lim;
    // Both errors vanish at x = 0 by construction of b_n.
    if (std::abs(x) < 1e-12) {
      pointwise = pointwise && e2 <= 1e-12 && e8 <= 1e-12;
    } else {
      pointwise = pointwise && e8 < e2;
    }
    if (e8 > worst) {
      worst = e8;
      worst_x = x;
    }
  }
  return {worst <= 0.10 && pointwise,
          fmt("max_rel_err(n=1e8)=%.4f (<= 0.10)", worst) + fmt(" at x=%.3f", worst_x) +
              " pointwise_better_than_n=1e2=" + (pointwise ? "yes" : "no")};
}

Outcome a5_maxima() {
  const TailModel g = gaussian_model();
  const auto xs = make_grid(-2.0, 4.0, 1e-3);
  std::vector<double> sups;
  for (std::uint64_t n : {1000ull, 1000000ull, 1000000000ull}) {
    const auto seq = solve_normalizers(g, n);
    double s = 0.0;
    for (double x : xs) s = std::max(s, std::abs(max_cdf(g, seq, x) - gumbel_cdf(x)));
    sups.push_back(s);
  }
  const bool det = sups[1] <= 0.05 && sups[1] < sups[0] && sups[2] < sups[1];

  const auto seq = solve_normalizers(g, 10000);
  const EmpiricalSample sample = sample_normalized_max(
      [](RngStream& s) { return s.normal(); }, seq, 100000, RngStream(42, 1), workers());
  const double ks = ks_one_sample(sample, [&](double x) { return max_cdf(g, seq, x); });
  return {det && ks <= 0.0061,
          fmt("sup=%.4f/", sups[0]) + fmt("%.4f/", sups[1]) + fmt("%.4f", sups[2]) +
              " (n=1e3/1e6/1e9, <= 0.05 at 1e6)" + fmt(" mc_ks=%.5f (<= 0.0061)", ks)};
}

Outcome a6_residual() {
  const TailModel g = gaussian_model();
  const auto xs = make_grid(0.0, 3.0, 1e-3);
  const auto sup = [&](double r) {
    double s = 0.0;
    for (double x : xs) s = std::max(s, std::abs(scaled_residual(g, r, x) - std::exp(-x)));
    return s;
  };
  const double s10 = sup(10.0), s30 = sup(30.0);
  return {s10 <= 0.01 && s30 <= 0.002,
          fmt("sup(r=10)=%.4e (<= 0.01)", s10) + fmt(" sup(r=30)=%.4e (<= 0.002)", s30)};
}

Outcome a7_log_residual() {
  const TailModel g = gaussian_model();
  const auto xs = make_grid(-2.0, 6.0, 1e-3);
  double sup20 = 0.0, id = 0.0;
  for (double r : {5.0, 10.0, 20.0, 30.0}) {
    for (double x : xs) {
      const double v = shifted_log_residual_cdf(g, r, x);
      id = std::max(id, std::abs(v - scaled_residual(g, r, std::exp(-x))));
      if (r == 20.0) sup20 = std::max(sup20, std::abs(v - gumbel_cdf(x)));
    }
  }
  return {sup20 <= 0.01 && id <= 1e-13,
          fmt("sup(r=20)=%.4e (<= 0.01)", sup20) + fmt(" identity_gap=%.2e (<= 1e-13)", id)};
}

Outcome a8_identities() {
  cli::RunConfig c = cli::defaults_for(cli::Subcommand::identity_suite);
  std::ostringstream out, err;
  const int code = cli::cmd_identity_suite(c, out, err);
  const json j = json::parse(out.str());
  std::string detail;
  for (const auto& check : j["checks"]) {
    if (!detail.empty()) detail += " ";
    detail += check["name"].get<std::string>() + "=" + (check["pass"].get<bool>() ? "ok" : "FAIL");
  }
  return {code == cli::kPass, detail};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome a9_reproducibility() {
  const fs::path root = fs::temp_directory_path() / "gexit_acceptance_a9";
  fs::remove_all(root);
  std::string sizes;
  std::vector<std::string> files;
  for (int w : {1, 8}) {
    const fs::path dir = root / ("workers" + std::to_string(w));
    const std::string cmd = std::string("\"") + GEXIT_CLI_PATH +
                            "\" exit-experiment --seed 42 --n-samples 2000 --workers " +
                            std::to_string(w) + " --output \"" + dir.string() +
                            "\" > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc == -1 || !fs::exists(dir / "samples.csv")) {
      return {false, "cli run failed for --workers " + std::to_string(w)};
    }
    files.push_back(slurp(dir / "samples.csv"));
  }
  fs::remove_all(root);
  const bool same = files[0] == files[1] && !files[0].empty();
  return {same, "samples.csv bytes=" + std::to_string(files[0].size()) + "/" +
                    std::to_string(files[1].size()) + (same ? " identical" : " differ")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"A1", a1_exit_law},      {"A2", a2_density},       {"A3", a3_pathwise},
      {"A4", a4_gnedenko},      {"A5", a5_maxima},        {"A6", a6_residual},
      {"A7", a7_log_residual},  {"A8", a8_identities},    {"A9", a9_reproducibility},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s %s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
