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

#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gexit/distributions.hpp"
#include "gexit/errors.hpp"
#include "gexit/evt.hpp"
#include "gexit/exitsim.hpp"
#include "gexit/grid.hpp"
#include "gexit/quadrature.hpp"
#include "gexit/residual.hpp"
#include "gexit/sample_io.hpp"
#include "gexit/stats.hpp"

namespace gexit::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json config_json(const RunConfig& c) {
  return json{
      {"subcommand", to_string(c.subcommand)},
      {"beta", c.beta},
      {"epsilon", c.epsilon},
      {"a", c.a},
      {"step", c.step},
      {"mode", c.mode},
      {"r", c.r_list},
      {"n", c.n_list},
      {"n_samples", c.n_samples},
      {"replicas", c.replicas},
      {"mc_n", c.mc_n},
      {"budget", c.budget},
      {"grid_min", c.grid_min},
      {"grid_max", c.grid_max},
      {"grid_step", c.grid_step},
      {"ks_threshold", c.ks_threshold},
      {"seed", c.seed},
      {"workers", c.workers},
      {"output", c.output_dir},
      {"format", c.format == OutputFormat::csv ? "csv" : "json"},
      {"perturb", c.perturb},
  };
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void write_output(const RunConfig& c, const std::string& name,
                  const std::string& content) {
  if (c.output_dir.empty()) return;
  std::filesystem::create_directories(c.output_dir);
  const auto path = std::filesystem::path(c.output_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

// Curve file named <stem>.csv or <stem>.json depending on --format.
void write_curve(const RunConfig& c, const std::string& stem,
                 const GridCurve& exact, const GridCurve& limit) {
  if (c.output_dir.empty()) return;
  std::ostringstream os;
  if (c.format == OutputFormat::csv) {
    write_comparison_csv(os, exact, limit);
    write_output(c, stem + ".csv", os.str());
    return;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double e = exact.ys()[i], l = limit.ys()[i];
    rows.push_back({{"x", exact.xs()[i]},
                    {"exact", e},
                    {"limit", l},
                    {"abs_error", std::abs(e - l)}});
  }
  write_output(c, stem + ".json", rows.dump(1) + "\n");
}

int emit_report(const RunConfig& c, json report, std::ostream& out) {
  const bool pass = report.value("pass", false);
  report["subcommand"] = to_string(c.subcommand);
  report["config"] = config_json(c);
  const std::string text = report.dump(2) + "\n";
  out << text;
  write_output(c, "report.json", text);
  return pass ? kPass : kCheckFailed;
}

// Runs a command body and turns exceptions into error reports and exit codes.
int guarded(const RunConfig& c, std::ostream& out, std::ostream& err,
            const std::function<int()>& body) {
  const auto fail = [&](const char* kind, const std::exception& e, int code) {
    json report{{"error", kind},
                {"message", e.what()},
                {"subcommand", to_string(c.subcommand)},
                {"config", config_json(c)},
                {"pass", false}};
    out << report.dump(2) << "\n";
    err << "gexit " << to_string(c.subcommand) << ": " << kind << ": "
        << e.what() << "\n";
    return code;
  };
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return fail("BudgetExceeded", e, kRuntimeError);
  } catch (const GuardExceeded& e) {
    return fail("GuardExceeded", e, kRuntimeError);
  } catch (const ZeroTail& e) {
    return fail("ZeroTail", e, kRuntimeError);
  } catch (const NoBracket& e) {
    return fail("NoBracket", e, kRuntimeError);
  } catch (const std::invalid_argument& e) {
    return fail("UsageError", e, kUsageError);
  } catch (const std::exception& e) {
    return fail("RuntimeError", e, kRuntimeError);
  }
}

// R(lo) > R(hi) for lo < hi. Below zero the tail rounds to 1 in binary64,
// so the comparison is made on the complementary tail R(-r) there, and on
// the log tail above zero where R itself underflows.
bool tail_strictly_above(double lo, double hi) {
  if (hi <= 0.0) return gaussian_tail(-lo) < gaussian_tail(-hi);
  if (lo >= 0.0) return gaussian_log_tail(hi) < gaussian_log_tail(lo);
  return gaussian_tail(-lo) < 0.5 && gaussian_log_tail(hi) < -std::log(2.0);
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

std::vector<double> sorted_positive_r(const RunConfig& c) {
  if (c.r_list.empty()) throw UsageError("--r needs at least one value");
  std::vector<double> rs = c.r_list;
  for (double r : rs) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw UsageError("every --r value must be finite and > 0");
    }
  }
  std::sort(rs.begin(), rs.end());
  return rs;
}

void require_finite_grid(const RunConfig& c) {
  if (!std::isfinite(c.grid_min) || !std::isfinite(c.grid_max) ||
      !std::isfinite(c.grid_step) || !(c.grid_step > 0.0)) {
    throw UsageError("grid bounds must be finite and grid step > 0");
  }
}

double max_over(const std::vector<double>& xs,
                const std::function<double(double)>& f) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, f(x));
  return m;
}

}  // namespace

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::exit_experiment: return "exit-experiment";
    case Subcommand::density_convergence: return "density-convergence";
    case Subcommand::evt: return "evt";
    case Subcommand::residual: return "residual";
    case Subcommand::identity_suite: return "identity-suite";
  }
  return "unknown";
}

int cmd_exit_experiment(const RunConfig& c, std::ostream& out,
                        std::ostream& err) {
  return guarded(c, out, err, [&] {
    const ExitProblem problem = ExitProblem::make(c.beta, c.epsilon, c.a, c.step);
    if (c.n_samples == 0) throw UsageError("--n-samples must be >= 1");
    if (c.workers == 0) throw UsageError("--workers must be >= 1");
    const RngStream root(c.seed, 0);

    std::vector<AcceptedExit> rows;
    std::uint64_t attempts = 0;
    if (c.mode == "simulate") {
      SamplerOptions options;
      options.budget = c.budget;
      options.workers = c.workers;
      ConditionedSample sample =
          sample_conditioned_exits(problem, c.n_samples, root, options);
      rows = std::move(sample.records);
      attempts = sample.attempts;
    } else if (c.mode == "limit-law") {
      rows.reserve(c.n_samples);
      for (std::uint64_t i = 0; i < c.n_samples; ++i) {
        RngStream s = root.substream(i);
        const double v = limit_law_sample(c.beta, c.a, s);
        ExitRecord rec;
        rec.normalized_time = v;
        rec.tau = v + problem.centering();
        rec.side = ExitSide::right;
        rows.push_back({i, rec});
      }
      attempts = c.n_samples;
    } else {
      throw UsageError("--mode must be 'simulate' or 'limit-law'");
    }

    const EmpiricalSample sample = normalized_times(rows);
    const double ks = ks_one_sample(
        sample, [&](double x) { return limit_law_cdf(c.beta, c.a, x); });
    const double rate =
        static_cast<double>(rows.size()) / static_cast<double>(attempts);
    const double expected = gaussian_tail(problem.threshold());
    const double se =
        std::sqrt(expected * (1.0 - expected) / static_cast<double>(attempts));

    if (c.format == OutputFormat::csv) {
      std::ostringstream os;
      write_exit_csv(os, rows);
      write_output(c, "samples.csv", os.str());
    } else {
      json arr = json::array();
      for (const auto& row : rows) {
        arr.push_back({{"attempt_index", row.attempt_index},
                       {"tau", row.record.tau},
                       {"side", row.record.side == ExitSide::right ? "right" : "left"},
                       {"normalized_time", row.record.normalized_time}});
      }
      write_output(c, "samples.json", arr.dump(1) + "\n");
    }

    json report{
        {"attempts", attempts},
        {"accepted", rows.size()},
        {"acceptance_rate", rate},
        {"expected_acceptance_rate", expected},
        {"acceptance_rate_z", se > 0.0 ? (rate - expected) / se : 0.0},
        {"ks_statistic", ks},
        {"ks_threshold", c.ks_threshold},
        {"pass", ks <= c.ks_threshold},
    };
    return emit_report(c, std::move(report), out);
  });
}

int cmd_density_convergence(const RunConfig& c, std::ostream& out,
                            std::ostream& err) {
  return guarded(c, out, err, [&] {
    const std::vector<double> rs = sorted_positive_r(c);
    require_finite_grid(c);
    const auto xs = make_grid(c.grid_min, c.grid_max, c.grid_step);
    const GridCurve limit = tabulate(xs, gumbel_density);

    json rows = json::array();
    std::vector<double> sups;
    for (double r : rs) {
      const GridCurve exact =
          tabulate(xs, [r](double x) { return shifted_density(r, x); });
      const double sup = grid_sup_distance(exact, limit);
      sups.push_back(sup);
      rows.push_back({{"r", r}, {"sup_distance", sup}});
      write_curve(c, "density_r" + format_number(r), exact, limit);
    }
    json report{{"curves", rows},
                {"grid_points", xs.size()},
                {"strictly_decreasing", strictly_decreasing(sups)},
                {"pass", strictly_decreasing(sups)}};
    return emit_report(c, std::move(report), out);
  });
}

int cmd_evt(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(c, out, err, [&] {
    if (c.n_list.empty()) throw UsageError("--n needs at least one value");
    std::vector<std::uint64_t> ns = c.n_list;
    for (auto n : ns) {
      if (n < 3) throw UsageError("every --n must be >= 3");
    }
    if (!(c.grid_step > 0.0) || !std::isfinite(c.grid_step)) {
      throw UsageError("grid step must be finite and > 0");
    }
    if (c.workers == 0) throw UsageError("--workers must be >= 1");
    std::sort(ns.begin(), ns.end());

    const TailModel model = gaussian_model();
    const auto xs_g = make_grid(-1.0, 2.0, c.grid_step);
    const auto xs_m = make_grid(-2.0, 4.0, c.grid_step);
    const GridCurve exp_limit =
        tabulate(xs_g, [](double x) { return std::exp(-x); });
    const GridCurve gumbel_limit = tabulate(xs_m, gumbel_cdf);

    json rows = json::array();
    std::vector<double> rel_errors, sups;
    for (auto n : ns) {
      const NormalizingSequence seq = solve_normalizers(model, n);
      const GridCurve lhs = tabulate(
          xs_g, [&](double x) { return gnedenko_lhs(model, seq, x); });
      const GridCurve maxima =
          tabulate(xs_m, [&](double x) { return max_cdf(model, seq, x); });
      double rel = 0.0;
      for (std::size_t i = 0; i < xs_g.size(); ++i) {
        rel = std::max(rel, std::abs(lhs.ys()[i] - exp_limit.ys()[i]) /
                                exp_limit.ys()[i]);
      }
      const double sup = grid_sup_distance(maxima, gumbel_limit);
      const double criterion_gap = max_over(xs_m, [&](double x) {
        return std::abs(max_cdf(model, seq, x) - criterion_cdf(model, seq, x));
      });
      rel_errors.push_back(rel);
      sups.push_back(sup);
      rows.push_back({{"n", n},
                      {"a_n", seq.a_n},
                      {"b_n", seq.b_n},
                      {"gnedenko_max_rel_error", rel},
                      {"max_cdf_sup_distance", sup},
                      {"criterion_gap", criterion_gap}});
      write_curve(c, "gnedenko_n" + std::to_string(n), lhs, exp_limit);
      write_curve(c, "max_cdf_n" + std::to_string(n), maxima, gumbel_limit);
    }

    json report{{"normalizers", rows},
                {"gnedenko_improves", strictly_decreasing(rel_errors)},
                {"max_cdf_improves", strictly_decreasing(sups)}};
    bool pass = strictly_decreasing(rel_errors) && strictly_decreasing(sups);

    if (c.replicas > 0) {
      if (c.mc_n < 3) throw UsageError("--mc-n must be >= 3");
      const NormalizingSequence seq = solve_normalizers(model, c.mc_n);
      const EmpiricalSample sample = sample_normalized_max(
          [](RngStream& s) { return s.normal(); }, seq, c.replicas,
          RngStream(c.seed, 1), c.workers);
      const double ks = ks_one_sample(
          sample, [&](double x) { return max_cdf(model, seq, x); });
      const double threshold =
          1.36 * std::sqrt(2.0 / static_cast<double>(c.replicas));
      report["monte_carlo"] = {{"n", c.mc_n},
                               {"replicas", c.replicas},
                               {"ks_statistic", ks},
                               {"ks_threshold", threshold},
                               {"pass", ks <= threshold}};
      pass = pass && ks <= threshold;
    }
    report["pass"] = pass;
    return emit_report(c, std::move(report), out);
  });
}

int cmd_residual(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(c, out, err, [&] {
    const std::vector<double> rs = sorted_positive_r(c);
    if (!(c.grid_step > 0.0) || !std::isfinite(c.grid_step)) {
      throw UsageError("grid step must be finite and > 0");
    }
    constexpr double kExactTol = 1e-13;
    const TailModel gauss = gaussian_model();
    const TailModel expo = exponential_model();
    const auto xs_s = make_grid(0.0, 3.0, c.grid_step);
    const auto xs_l = make_grid(-2.0, 6.0, c.grid_step);
    const GridCurve exp_limit =
        tabulate(xs_s, [](double x) { return std::exp(-x); });
    const GridCurve gumbel_limit = tabulate(xs_l, gumbel_cdf);

    json rows = json::array();
    std::vector<double> scaled_sups, shifted_sups;
    double identity_gap = 0.0, fixed_point_gap = 0.0;
    for (double r : rs) {
      const GridCurve scaled = tabulate(
          xs_s, [&](double x) { return scaled_residual(gauss, r, x); });
      const GridCurve shifted = tabulate(xs_l, [&](double x) {
        return shifted_log_residual_cdf(gauss, r, x);
      });
      const double id = max_over(xs_l, [&](double x) {
        return std::abs(shifted_log_residual_cdf(gauss, r, x) -
                        scaled_residual(gauss, r, std::exp(-x)));
      });
      const double fp = max_over(xs_l, [&](double x) {
        return std::abs(shifted_log_residual_cdf(expo, r, x) - gumbel_cdf(x));
      });
      scaled_sups.push_back(grid_sup_distance(scaled, exp_limit));
      shifted_sups.push_back(grid_sup_distance(shifted, gumbel_limit));
      identity_gap = std::max(identity_gap, id);
      fixed_point_gap = std::max(fixed_point_gap, fp);
      rows.push_back({{"r", r},
                      {"scaled_residual_sup", scaled_sups.back()},
                      {"shifted_log_residual_sup", shifted_sups.back()},
                      {"identity_gap", id},
                      {"exponential_fixed_point_gap", fp}});
      write_curve(c, "scaled_residual_r" + format_number(r), scaled, exp_limit);
      write_curve(c, "log_residual_r" + format_number(r), shifted, gumbel_limit);
    }
    const bool pass = strictly_decreasing(scaled_sups) &&
                      strictly_decreasing(shifted_sups) &&
                      identity_gap <= kExactTol && fixed_point_gap <= kExactTol;
    json report{{"curves", rows},
                {"identity_gap", identity_gap},
                {"exponential_fixed_point_gap", fixed_point_gap},
                {"tolerance", kExactTol},
                {"pass", pass}};
    return emit_report(c, std::move(report), out);
  });
}

int cmd_identity_suite(const RunConfig& c, std::ostream& out,
                       std::ostream& err) {
  return guarded(c, out, err, [&] {
    require_finite_grid(c);
    const auto xs = make_grid(c.grid_min, c.grid_max, c.grid_step);
    const TailModel gauss = gaussian_model();
    const TailModel expo = exponential_model();
    const double bump = c.perturb ? 1e-9 : 0.0;

    struct Check {
      std::string name;
      double value;
      double tolerance;
      bool pass;
    };
    std::vector<Check> checks;
    const auto add_max = [&](std::string name, double value, double tol) {
      checks.push_back({std::move(name), value, tol, value <= tol});
    };

    add_max("gumbel_identity", max_over(xs, [&](double x) {
              return std::abs(gumbel_identity_residual(x) + bump);
            }), 1e-12);

    double fixed = 0.0;
    for (double r : {0.5, 5.0, 30.0}) {
      fixed = std::max(fixed, max_over(xs, [&](double x) {
        return std::abs(shifted_log_residual_cdf(expo, r, x) - gumbel_cdf(x));
      }));
    }
    add_max("exponential_fixed_point", fixed, 1e-13);

    const auto rs_sym = make_grid(0.0, 8.0, 1e-2);
    add_max("gaussian_symmetry", max_over(rs_sym, [](double r) {
              return std::abs(gaussian_tail(-r) + gaussian_tail(r) - 1.0);
            }), 1e-13);

    // Mills bounds 1 - 1/r^2 < r R(r)/phi(r) < 1; report the worst margin.
    const auto rs_mills = make_grid(2.0, 40.0, 1e-2);
    double mills_violation = 0.0;
    for (double r : rs_mills) {
      const double v = r * gaussian_mills_ratio(r);
      if (!(v < 1.0 && v > 1.0 - 1.0 / (r * r))) mills_violation += 1.0;
    }
    checks.push_back({"mills_bounds", mills_violation, 0.0, mills_violation == 0.0});

    const auto rs_mono = make_grid(-8.0, 40.0, 1e-2);
    double mono_violation = 0.0;
    for (std::size_t i = 1; i < rs_mono.size(); ++i) {
      if (!tail_strictly_above(rs_mono[i - 1], rs_mono[i])) {
        mono_violation += 1.0;
      }
    }
    checks.push_back({"gaussian_tail_decreasing", mono_violation, 0.0,
                      mono_violation == 0.0});

    const double h = 1e-5;
    const auto xs_d = make_grid(-5.0, 10.0, 1e-2);
    add_max("gumbel_cdf_derivative", max_over(xs_d, [&](double x) {
              const double fd = (gumbel_cdf(x + h) - gumbel_cdf(x - h)) / (2 * h);
              return std::abs(fd - gumbel_density(x));
            }), 1e-8);

    double norm = 0.0;
    for (double r : {0.0, 1.0, 2.0, 5.0}) {
      const double mass = adaptive_simpson(
          [r](double x) { return conditional_density_p_r(r, x); }, -15.0, 40.0);
      norm = std::max(norm, std::abs(mass - 1.0));
    }
    add_max("p_r_normalization", norm, 1e-8);

    const auto xs_l = make_grid(-2.0, 6.0, 1e-2);
    double id = 0.0;
    for (double r : {10.0, 20.0, 30.0}) {
      id = std::max(id, max_over(xs_l, [&](double x) {
        return std::abs(shifted_log_residual_cdf(gauss, r, x) -
                        scaled_residual(gauss, r, std::exp(-x)));
      }));
    }
    add_max("log_transform_identity", id, 1e-13);

    double at_zero = 0.0;
    for (std::uint64_t n : {10ull, 1000ull, 1000000ull, 1000000000ull}) {
      const auto seq = solve_normalizers(gauss, n);
      at_zero = std::max(at_zero, std::abs(gnedenko_lhs(gauss, seq, 0.0) - 1.0));
    }
    add_max("gnedenko_at_zero", at_zero, 1e-12);

    const auto seq6 = solve_normalizers(gauss, 1000000);
    add_max("criterion_equivalence", max_over(xs_l, [&](double x) {
              return std::abs(max_cdf(gauss, seq6, x) -
                              criterion_cdf(gauss, seq6, x));
            }), 1e-6);

    bool pass = true;
    json arr = json::array();
    err << std::left << std::setw(28) << "check" << std::setw(14) << "value"
        << std::setw(10) << "tol" << "result\n";
    for (const auto& ch : checks) {
      pass = pass && ch.pass;
      arr.push_back({{"name", ch.name},
                     {"value", ch.value},
                     {"tolerance", ch.tolerance},
                     {"pass", ch.pass}});
      char line[128];
      std::snprintf(line, sizeof line, "%-28s%-14.3e%-10.0e%s\n",
                    ch.name.c_str(), ch.value, ch.tolerance,
                    ch.pass ? "PASS" : "FAIL");
      err << line;
    }
    return emit_report(c, json{{"checks", arr}, {"pass", pass}}, out);
  });
}

RunConfig defaults_for(Subcommand s) {
  RunConfig c;
  c.subcommand = s;
  switch (s) {
    case Subcommand::exit_experiment:
      break;
    case Subcommand::density_convergence:
      c.r_list = {5, 10, 20, 40};
      c.grid_min = -1.0;
      c.grid_max = 5.0;
      c.grid_step = 1e-3;
      break;
    case Subcommand::evt:
      c.n_list = {1'000, 1'000'000, 1'000'000'000};
      c.grid_step = 1e-3;
      break;
    case Subcommand::residual:
      c.r_list = {10, 30};
      c.grid_step = 1e-3;
      break;
    case Subcommand::identity_suite:
      c.grid_min = -5.0;
      c.grid_max = 10.0;
      c.grid_step = 1e-2;
      break;
  }
  return c;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gumbel limits for conditioned diffusion exit times"};
  app.require_subcommand(1);

  struct Entry {
    Subcommand kind;
    CLI::App* app;
    RunConfig config;
    CLI::Option* seed = nullptr;
    CLI::Option* grid_min = nullptr;
    CLI::Option* grid_max = nullptr;
  };
  std::vector<Entry> entries;
  const std::pair<Subcommand, const char*> specs[] = {
      {Subcommand::exit_experiment, "Sample conditioned exits and compare with the limit law"},
      {Subcommand::density_convergence, "Shifted conditional density vs the Gumbel density"},
      {Subcommand::evt, "Gaussian normalizing constants, Gnedenko criterion, maxima"},
      {Subcommand::residual, "Residual life scaling and its logarithmic transform"},
      {Subcommand::identity_suite, "Deterministic identity and invariant checks"},
  };
  entries.reserve(std::size(specs));
  for (const auto& [kind, help] : specs) {
    entries.push_back({kind, app.add_subcommand(to_string(kind), help),
                       defaults_for(kind)});
  }

  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  for (auto& e : entries) {
    auto* sub = e.app;
    RunConfig& cfg = e.config;
    e.seed = sub->add_option("--seed", cfg.seed, "RNG seed (default $GEXIT_SEED or 42)");
    sub->add_option("--output", cfg.output_dir, "Directory for CSV/JSON outputs");
    sub->add_option("--format", cfg.format, "Curve and sample file format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--workers", cfg.workers, "Worker threads")
        ->default_val(std::max(1u, std::thread::hardware_concurrency()));
    sub->add_option("--grid-step", cfg.grid_step, "Grid spacing");
    switch (e.kind) {
      case Subcommand::exit_experiment:
        sub->add_option("--beta", cfg.beta, "Drift slope");
        sub->add_option("--epsilon", cfg.epsilon, "Noise amplitude");
        sub->add_option("--a", cfg.a, "Start offset multiplier, x0 = -epsilon a");
        sub->add_option("--step", cfg.step, "Integration step");
        sub->add_option("--n-samples", cfg.n_samples, "Accepted right exits");
        sub->add_option("--budget", cfg.budget, "Maximum attempts");
        sub->add_option("--ks-threshold", cfg.ks_threshold, "Pass threshold");
        sub->add_option("--mode", cfg.mode, "simulate | limit-law");
        break;
      case Subcommand::density_convergence:
        sub->add_option("--r", cfg.r_list, "Truncation levels")
            ->expected(0, CLI::detail::expected_max_vector_size);
        e.grid_min = sub->add_option("--grid-min", cfg.grid_min);
        e.grid_max = sub->add_option("--grid-max", cfg.grid_max);
        break;
      case Subcommand::evt:
        sub->add_option("--n", cfg.n_list, "Sample sizes for the normalizers")
            ->expected(0, CLI::detail::expected_max_vector_size);
        sub->add_option("--replicas", cfg.replicas, "Monte Carlo maxima (0 skips)");
        sub->add_option("--mc-n", cfg.mc_n, "Block size of each Monte Carlo maximum");
        break;
      case Subcommand::residual:
        sub->add_option("--r", cfg.r_list, "Conditioning levels")
            ->expected(0, CLI::detail::expected_max_vector_size);
        break;
      case Subcommand::identity_suite:
        e.grid_min = sub->add_option("--grid-min", cfg.grid_min);
        e.grid_max = sub->add_option("--grid-max", cfg.grid_max);
        sub->add_flag("--perturb", cfg.perturb, "Test hook: inject an error");
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  for (auto& e : entries) {
    if (!e.app->parsed()) continue;
    RunConfig& cfg = e.config;
    if (e.seed->count() == 0) {
      if (const char* env = std::getenv("GEXIT_SEED")) {
        try {
          std::size_t used = 0;
          cfg.seed = std::stoull(env, &used);
          if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
          err << "gexit: GEXIT_SEED is not an unsigned integer\n";
          return kUsageError;
        }
      }
    }
    switch (e.kind) {
      case Subcommand::exit_experiment: return cmd_exit_experiment(cfg, out, err);
      case Subcommand::density_convergence: return cmd_density_convergence(cfg, out, err);
      case Subcommand::evt: return cmd_evt(cfg, out, err);
      case Subcommand::residual: return cmd_residual(cfg, out, err);
      case Subcommand::identity_suite: return cmd_identity_suite(cfg, out, err);
    }
  }
  return kUsageError;
}

}  // namespace gexit::cli
