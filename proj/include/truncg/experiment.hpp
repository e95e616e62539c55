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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "truncg/nong.hpp"

namespace truncg {

struct ExperimentConfig {
  std::size_t n_min = 1;
  std::size_t n_max = 20;
  std::size_t samples_per_n = 100000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  double trace_tol = 1e-4;
  std::size_t chunk_size = 1024;
  std::size_t max_fock_dim = 512;
  /// Allowed fraction of failed evaluations per dimension block.
  double failure_budget = 1e-3;

  /// Throws ErrorKind::InvalidArgument on an inconsistent configuration.
  void validate() const;
};

struct BlockResult {
  std::size_t n_max = 0;
  std::vector<SampleRecord> records;  ///< successful samples, in sample order
  std::size_t failures = 0;
  std::vector<std::string> failure_messages;  ///< first few, for diagnostics
};

/// RNG stream id of chunk `chunk` in the block for truncation N.
constexpr std::uint64_t stream_id(std::size_t n_max, std::size_t chunk) {
  return (static_cast<std::uint64_t>(n_max) << 32) | static_cast<std::uint64_t>(chunk);
}

/// Draws samples_per_n random states for every N in [n_min, n_max] and
/// evaluates them. Sample i of block N comes from stream
/// stream_id(N, i / chunk_size), so output does not depend on `workers`.
/// Throws ErrorKind::Convergence when a block exceeds its failure budget.
std::vector<BlockResult> run_experiment(const ExperimentConfig &cfg);

struct Stat {
  double mean = 0.0;
  double std = 0.0;  ///< sample standard deviation (n - 1)
};

struct SummaryRow {
  std::size_t n_max = 0;
  std::size_t count = 0;
  Stat purity_rho;
  Stat purity_tau;
  Stat overlap;
  Stat non_gaussianity;
  Stat sympl_eig;
};

/// Throws ErrorKind::InsufficientData on empty input.
SummaryRow summarize(std::span<const SampleRecord> records);

enum class Field { Purity, PurityTau, Overlap, NonGaussianity, Sympl };

const char *to_string(Field f);
/// Accepts purity, purity_tau, overlap, nong, sympl.
Field parse_field(const std::string &name);
double field_value(const SampleRecord &r, Field f);

struct Histogram {
  Field field = Field::Purity;
  std::vector<double> bin_edges;  ///< bins + 1 strictly increasing edges
  std::vector<std::size_t> counts;

  std::size_t total() const;
  double bin_width(std::size_t i) const { return bin_edges[i + 1] - bin_edges[i]; }
  /// Mean estimated from bin midpoints.
  double binned_mean() const;
  /// Midpoint of the most populated bin.
  double mode() const;
};

/// Equal-width bins over [min, max] of the field; bins are right-open except
/// the last. A degenerate range is widened to [v - 0.5, v + 0.5].
Histogram histogram(std::span<const SampleRecord> records, Field field, std::size_t bins);

struct ScatterPoint {
  std::size_t n_max = 0;
  double purity = 0.0;
  double nong = 0.0;
};

struct TypicalPoint {
  std::size_t n_max = 0;
  std::size_t count = 0;
  double purity = 0.0;
  double nong = 0.0;
};

struct ScatterData {
  std::vector<ScatterPoint> points;
  std::vector<TypicalPoint> typical;
};

ScatterData scatter_export(std::span<const BlockResult> blocks);

}  // namespace truncg
