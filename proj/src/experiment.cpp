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

#include "truncg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "truncg/error.hpp"
#include "truncg/randstates.hpp"

namespace truncg {

void ExperimentConfig::validate() const {
  if (n_min < 1) throw Error(ErrorKind::InvalidArgument, "n_min must be at least 1");
  if (n_max < n_min) throw Error(ErrorKind::InvalidArgument, "n_max must be >= n_min");
  if (samples_per_n < 1) throw Error(ErrorKind::InvalidArgument, "samples_per_n must be positive");
  if (workers < 1) throw Error(ErrorKind::InvalidArgument, "workers must be positive");
  if (chunk_size < 1) throw Error(ErrorKind::InvalidArgument, "chunk_size must be positive");
  if (!(trace_tol > 0.0 && trace_tol < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "trace_tol must lie in (0, 1)");
  }
  if (max_fock_dim < 1) throw Error(ErrorKind::InvalidArgument, "max_fock_dim must be positive");
  if (!(failure_budget >= 0.0 && failure_budget <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "failure_budget must lie in [0, 1]");
  }
  if (n_max >= (std::size_t{1} << 31)) throw Error(ErrorKind::InvalidArgument, "n_max too large");
}

namespace {

struct Slot {
  std::optional<SampleRecord> record;
  std::string error;
};

struct WorkItem {
  std::size_t block;
  std::size_t chunk;
};

}  // namespace

std::vector<BlockResult> run_experiment(const ExperimentConfig &cfg) {
  cfg.validate();
  const std::size_t n_blocks = cfg.n_max - cfg.n_min + 1;
  const std::size_t chunks = (cfg.samples_per_n + cfg.chunk_size - 1) / cfg.chunk_size;
  const FockMatrixOptions fock{cfg.trace_tol, cfg.max_fock_dim};

  std::vector<std::vector<Slot>> slots(n_blocks, std::vector<Slot>(cfg.samples_per_n));
  std::vector<WorkItem> items;
  items.reserve(n_blocks * chunks);
  // Largest N first: those chunks are the slowest.
  for (std::size_t b = n_blocks; b-- > 0;) {
    for (std::size_t c = 0; c < chunks; ++c) items.push_back({b, c});
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr fatal;
  std::mutex fatal_mutex;

  auto worker = [&] {
    try {
      for (std::size_t w = next.fetch_add(1); w < items.size(); w = next.fetch_add(1)) {
        const auto [b, c] = items[w];
        const std::size_t n = cfg.n_min + b;
        RngStream rng(cfg.seed, stream_id(n, c));
        const std::size_t begin = c * cfg.chunk_size;
        const std::size_t end = std::min(begin + cfg.chunk_size, cfg.samples_per_n);
        for (std::size_t i = begin; i < end; ++i) {
          const DensityMatrix rho = sample_density_matrix(n + 1, rng);
          try {
            slots[b][i].record = non_gaussianity(rho, fock);
          } catch (const Error &e) {
            slots[b][i].error = e.what();
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(fatal_mutex);
      if (!fatal) fatal = std::current_exception();
      next.store(items.size());
    }
  };

  const std::size_t n_threads = std::min(cfg.workers, items.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);

  std::vector<BlockResult> out(n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    BlockResult &blk = out[b];
    blk.n_max = cfg.n_min + b;
    blk.records.reserve(cfg.samples_per_n);
    for (std::size_t i = 0; i < cfg.samples_per_n; ++i) {
      Slot &s = slots[b][i];
      if (s.record) {
        blk.records.push_back(*s.record);
      } else {
        ++blk.failures;
        if (blk.failure_messages.size() < 5) {
          blk.failure_messages.push_back("sample " + std::to_string(i) + ": " + s.error);
        }
      }
    }
    const double allowed = cfg.failure_budget * static_cast<double>(cfg.samples_per_n);
    if (static_cast<double>(blk.failures) > allowed) {
      std::string msg = "N=" + std::to_string(blk.n_max) + ": " + std::to_string(blk.failures) +
                        " of " + std::to_string(cfg.samples_per_n) +
                        " samples failed, above the failure budget";
      for (const auto &m : blk.failure_messages) msg += "\n  " + m;
      throw Error(ErrorKind::Convergence, msg);
    }
  }
  return out;
}

namespace {

Stat stat_of(std::span<const SampleRecord> records, double SampleRecord::*member) {
  Stat s;
  const double n = static_cast<double>(records.size());
  double sum = 0.0;
  for (const auto &r : records) sum += r.*member;
  s.mean = sum / n;
  if (records.size() > 1) {
    double ss = 0.0;
    for (const auto &r : records) {
      const double dv = r.*member - s.mean;
      ss += dv * dv;
    }
    s.std = std::sqrt(ss / (n - 1.0));
  }
  return s;
}

}  // namespace

SummaryRow summarize(std::span<const SampleRecord> records) {
  if (records.empty()) throw Error(ErrorKind::InsufficientData, "cannot summarize zero records");
  SummaryRow row;
  row.n_max = records.front().n_max;
  row.count = records.size();
  row.purity_rho = stat_of(records, &SampleRecord::purity_rho);
  row.purity_tau = stat_of(records, &SampleRecord::purity_tau);
  row.overlap = stat_of(records, &SampleRecord::overlap);
  row.non_gaussianity = stat_of(records, &SampleRecord::non_gaussianity);
  row.sympl_eig = stat_of(records, &SampleRecord::sympl_eig);
  return row;
}

const char *to_string(Field f) {
  switch (f) {
    case Field::Purity: return "purity";
    case Field::PurityTau: return "purity_tau";
    case Field::Overlap: return "overlap";
    case Field::NonGaussianity: return "nong";
    case Field::Sympl: return "sympl";
  }
  return "?";
}

Field parse_field(const std::string &name) {
  for (Field f : {Field::Purity, Field::PurityTau, Field::Overlap, Field::NonGaussianity,
                  Field::Sympl}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown field '" + name + "'");
}

double field_value(const SampleRecord &r, Field f) {
  switch (f) {
    case Field::Purity: return r.purity_rho;
    case Field::PurityTau: return r.purity_tau;
    case Field::Overlap: return r.overlap;
    case Field::NonGaussianity: return r.non_gaussianity;
    case Field::Sympl: return r.sympl_eig;
  }
  return 0.0;
}

std::size_t Histogram::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

double Histogram::binned_mean() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    acc += static_cast<double>(counts[i]) * 0.5 * (bin_edges[i] + bin_edges[i + 1]);
  }
  return acc / static_cast<double>(total());
}

double Histogram::mode() const {
  const auto it = std::max_element(counts.begin(), counts.end());
  const auto i = static_cast<std::size_t>(it - counts.begin());
  return 0.5 * (bin_edges[i] + bin_edges[i + 1]);
}

Histogram histogram(std::span<const SampleRecord> records, Field field, std::size_t bins) {
  if (bins < 1) throw Error(ErrorKind::InvalidArgument, "bins must be positive");
  if (records.empty()) throw Error(ErrorKind::InsufficientData, "cannot histogram zero records");
  double lo = field_value(records.front(), field);
  double hi = lo;
  for (const auto &r : records) {
    const double v = field_value(r, field);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  Histogram h;
  h.field = field;
  h.bin_edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i < bins; ++i) h.bin_edges[i] = lo + static_cast<double>(i) * width;
  h.bin_edges[bins] = hi;
  h.counts.assign(bins, 0);
  for (const auto &r : records) {
    const double v = field_value(r, field);
    auto i = static_cast<std::size_t>(std::clamp((v - lo) / width, 0.0, static_cast<double>(bins - 1)));
    while (i > 0 && v < h.bin_edges[i]) --i;
    while (i + 1 < bins && v >= h.bin_edges[i + 1]) ++i;
    ++h.counts[i];
  }
  return h;
}

ScatterData scatter_export(std::span<const BlockResult> blocks) {
  ScatterData out;
  for (const auto &blk : blocks) {
    if (blk.records.empty()) continue;
    double mu = 0.0, nong = 0.0;
    for (const auto &r : blk.records) {
      out.points.push_back({blk.n_max, r.purity_rho, r.non_gaussianity});
      mu += r.purity_rho;
      nong += r.non_gaussianity;
    }
    const double n = static_cast<double>(blk.records.size());
    out.typical.push_back({blk.n_max, blk.records.size(), mu / n, nong / n});
  }
  return out;
}

}  // namespace truncg
