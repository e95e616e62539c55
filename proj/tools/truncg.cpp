// Copyright 2026 The truncg Authors
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

// truncg: random truncated states, their purity and non-Gaussianity.
//
//   truncg table    per-N summary statistics (CSV or JSON)
//   truncg hist     histogram of one measured quantity at fixed N
//   truncg scatter  (N, purity, nong) points plus per-N typical points
//   truncg fit      fit the typical purity / non-Gaussianity laws
//   truncg validate analytic, oracle and invariance self-checks
//
// Exit codes: 0 success, 1 runtime or validation failure, 2 usage error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "truncg/error.hpp"
#include "truncg/experiment.hpp"
#include "truncg/fit.hpp"
#include "truncg/io.hpp"
#include "truncg/kernels.hpp"
#include "truncg/validation.hpp"

namespace {

using namespace truncg;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char *env = std::getenv("TRUNCG_SEED");
  if (env == nullptr || *env == '\0') return 1;
  char *end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 0);
  if (*end != '\0' || env[0] == '-') throw UsageError("TRUNCG_SEED is not a 64-bit unsigned integer");
  return v;
}

std::size_t default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

struct CampaignFlags {
  std::size_t n_min = 1;
  std::size_t n_max = 20;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  double trace_tol = 1e-4;
  std::size_t chunk_size = 1024;

  ExperimentConfig config() const {
    if (n_max < n_min) throw UsageError("--n-max must be >= --n-min");
    ExperimentConfig cfg;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.samples_per_n = samples;
    cfg.seed = seed;
    cfg.workers = workers;
    cfg.trace_tol = trace_tol;
    cfg.chunk_size = chunk_size;
    return cfg;
  }
};

void add_common(CLI::App *cmd, CampaignFlags &f) {
  cmd->add_option("--samples", f.samples, "Samples per dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Base seed (default: $TRUNCG_SEED or 1)")->capture_default_str();
  cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--trace-tol", f.trace_tol, "Trace tolerance of the reference Gaussian")
      ->check(CLI::Range(1e-15, 0.5))
      ->capture_default_str();
  cmd->add_option("--chunk-size", f.chunk_size, "Samples per RNG stream")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_range(CLI::App *cmd, CampaignFlags &f) {
  cmd->add_option("--n-min", f.n_min, "Smallest maximum occupation N")
      ->check(CLI::Range(std::size_t{1}, std::size_t{200}))
      ->capture_default_str();
  cmd->add_option("--n-max", f.n_max, "Largest maximum occupation N")
      ->check(CLI::Range(std::size_t{1}, std::size_t{200}))
      ->capture_default_str();
}

// Writes to `path`, or stdout when empty. LF line endings on every platform.
template <class Fn>
void emit(const std::string &path, Fn &&write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
  write(os);
  os.flush();
  if (!os) throw Error(ErrorKind::Numerical, "failed writing '" + path + "'");
}

std::vector<SummaryRow> run_table(const ExperimentConfig &cfg) {
  std::vector<SummaryRow> rows;
  for (const auto &blk : run_experiment(cfg)) {
    if (blk.failures > 0) {
      std::cerr << "N=" << blk.n_max << ": " << blk.failures << " failed samples excluded\n";
    }
    rows.push_back(summarize(blk.records));
  }
  return rows;
}

std::string companion_path(const std::string &out) {
  const std::string ext = ".csv";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + "_typical.csv";
  }
  return out + "_typical.csv";
}

std::vector<std::size_t> parse_n_list(const std::string &s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char *end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0' || v < 1 || v > 200) {
      throw UsageError("--n-list entries must be integers in [1, 200]");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError("--n-list is empty");
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Random truncated Fock-space states: purity, reference Gaussian, non-Gaussianity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "truncg 0.1.0");

  CampaignFlags table_f, hist_f, scatter_f, fit_f;
  std::string table_format = "csv", table_out, table_records;
  std::string hist_field = "purity", hist_format = "csv", hist_out;
  std::size_t hist_n = 5, hist_bins = 50;
  std::string scatter_list = "2,5,10,15,20", scatter_out, scatter_typical;
  std::string fit_summary, fit_out;
  bool fit_weighted = false;
  bool validate_quick = false;
  std::uint64_t validate_seed = 20090101;
  std::size_t validate_workers = 1;

  try {
    const std::uint64_t seed = default_seed();
    const std::size_t workers = default_workers();
    for (CampaignFlags *f : {&table_f, &hist_f, &scatter_f, &fit_f}) {
      f->seed = seed;
      f->workers = workers;
    }
    validate_workers = workers;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto *table = app.add_subcommand("table", "Per-N means and standard deviations");
  add_range(table, table_f);
  add_common(table, table_f);
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("--out", table_out, "Output file (default stdout)");
  table->add_option("--records", table_records, "Also write every sample record (CSV)");

  auto *hist = app.add_subcommand("hist", "Histogram of one quantity at fixed N");
  hist->add_option("--n", hist_n, "Maximum occupation N")
      ->check(CLI::Range(std::size_t{1}, std::size_t{200}))
      ->capture_default_str();
  add_common(hist, hist_f);
  hist->add_option("--field", hist_field, "Quantity to histogram")
      ->check(CLI::IsMember({"purity", "purity_tau", "overlap", "nong", "sympl"}))
      ->capture_default_str();
  hist->add_option("--bins", hist_bins, "Number of equal-width bins")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hist->add_option("--format", hist_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  hist->add_option("--out", hist_out, "Output file (default stdout)");

  auto *scatter = app.add_subcommand("scatter", "Purity and non-Gaussianity of every sample");
  scatter->add_option("--n-list", scatter_list, "Comma-separated list of N")->capture_default_str();
  add_common(scatter, scatter_f);
  scatter->add_option("--out", scatter_out, "Point file (CSV)")->required();
  scatter->add_option("--typical-out", scatter_typical,
                      "Typical-point file (default: <out>_typical.csv)");

  auto *fit = app.add_subcommand("fit", "Fit the typical purity and non-Gaussianity laws");
  fit->add_option("--summary", fit_summary, "Summary file from `table` (CSV or JSON)");
  add_range(fit, fit_f);
  add_common(fit, fit_f);
  fit->add_flag("--weighted", fit_weighted, "Weight points by 1/std^2");
  fit->add_option("--out", fit_out, "Report file (JSON); default stdout");

  auto *validate = app.add_subcommand("validate", "Run the analytic and oracle self-checks");
  validate->add_flag("--quick", validate_quick, "Reduced sample counts");
  validate->add_option("--seed", validate_seed, "Seed for the random checks")->capture_default_str();
  validate->add_option("--workers", validate_workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (table->parsed()) {
      const ExperimentConfig cfg = table_f.config();
      std::vector<BlockResult> blocks = run_experiment(cfg);
      std::vector<SummaryRow> rows;
      for (const auto &blk : blocks) {
        if (blk.failures > 0) {
          std::cerr << "N=" << blk.n_max << ": " << blk.failures << " failed samples excluded\n";
        }
        rows.push_back(summarize(blk.records));
      }
      emit(table_out, [&](std::ostream &os) {
        if (table_format == "json") {
          io::write_summary_json(os, rows);
        } else {
          io::write_summary_csv(os, rows);
        }
      });
      if (!table_records.empty()) {
        std::vector<SampleRecord> all;
        for (const auto &blk : blocks) all.insert(all.end(), blk.records.begin(), blk.records.end());
        emit(table_records, [&](std::ostream &os) { io::write_records_csv(os, all); });
      }
    } else if (hist->parsed()) {
      CampaignFlags f = hist_f;
      f.n_min = f.n_max = hist_n;
      const auto blocks = run_experiment(f.config());
      const Histogram h = histogram(blocks.front().records, parse_field(hist_field), hist_bins);
      emit(hist_out, [&](std::ostream &os) {
        if (hist_format == "json") {
          io::write_histogram_json(os, h);
        } else {
          io::write_histogram_csv(os, h);
        }
      });
    } else if (scatter->parsed()) {
      std::vector<BlockResult> blocks;
      for (std::size_t n : parse_n_list(scatter_list)) {
        CampaignFlags f = scatter_f;
        f.n_min = f.n_max = n;
        auto b = run_experiment(f.config());
        blocks.push_back(std::move(b.front()));
      }
      const ScatterData data = scatter_export(blocks);
      emit(scatter_out, [&](std::ostream &os) { io::write_scatter_csv(os, data.points); });
      const std::string typical = scatter_typical.empty() ? companion_path(scatter_out) : scatter_typical;
      emit(typical, [&](std::ostream &os) { io::write_typical_csv(os, data.typical); });
    } else if (fit->parsed()) {
      std::vector<SummaryRow> rows;
      if (!fit_summary.empty()) {
        std::ifstream is(fit_summary, std::ios::binary);
        if (!is) throw Error(ErrorKind::Parse, "cannot open '" + fit_summary + "'");
        rows = io::read_summary(is);
      } else {
        rows = run_table(fit_f.config());
      }
      FitOptions opts;
      opts.weighted = fit_weighted;
      const FitResult fr = fit_nong(rows, opts);
      const auto purity = purity_residuals(rows);
      emit(fit_out, [&](std::ostream &os) { io::write_fit_json(os, fr, purity); });
      std::ostream &human = fit_out.empty() ? std::cerr : std::cout;
      human << "c1 = " << io::format_double(fr.c1) << "  (reference " << kReferenceC1 << ")\n"
            << "c2 = " << io::format_double(fr.c2) << "  (reference " << kReferenceC2 << ")\n"
            << "rss = " << io::format_double(fr.rss) << '\n';
      if (!fr.grid_unimodal) human << "warning: fit objective is not unimodal on the scan grid\n";
    } else if (validate->parsed()) {
      ValidateOptions opts;
      opts.quick = validate_quick;
      opts.seed = validate_seed;
      opts.workers = validate_workers;
      const auto t0 = std::chrono::steady_clock::now();
      const auto results = run_validation(opts);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      bool ok = true;
      for (const auto &r : results) {
        ok = ok && r.passed;
        std::printf("[%s] %-56s deviation %.3e (tolerance %.1e)%s%s\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.deviation, r.tolerance, r.detail.empty() ? "" : "  ",
                    r.detail.c_str());
      }
      std::printf("%s: %zu checks, kernels=%s, %.1f s\n", ok ? "OK" : "FAILED", results.size(),
                  kernels::to_string(kernels::active_isa()), secs);
      return ok ? 0 : kExitRuntime;
    }
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
