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

// File formats. All outputs are UTF-8 with LF line endings; floating-point
// values use 17 significant digits so that writing, parsing and writing again
// reproduces the same bytes.
//
//   records CSV    N,purity_rho,purity_tau,overlap,nong,sympl
//   summary CSV    N,count,<q>_mean,<q>_std for q in
//                  purity_rho, purity_tau, overlap, nong, sympl
//   summary JSON   {"schema": "truncg.summary/1", "rows": [...]}
//   histogram CSV  bin_left,bin_right,count
//   histogram JSON {"schema": "truncg.histogram/1", "field", "bin_edges", "counts"}
//   scatter CSV    N,purity,nong
//   typical CSV    N,count,purity_mean,nong_mean
//   fit JSON       {"schema": "truncg.fit/1", "c1", "c2", "rss", ...}

#include <iosfwd>
#include <string>
#include <vector>

#include "truncg/experiment.hpp"
#include "truncg/fit.hpp"

namespace truncg::io {

std::string format_double(double x);

void write_records_csv(std::ostream &os, const std::vector<SampleRecord> &records);
std::vector<SampleRecord> read_records_csv(std::istream &is);

void write_summary_csv(std::ostream &os, const std::vector<SummaryRow> &rows);
std::vector<SummaryRow> read_summary_csv(std::istream &is);

void write_summary_json(std::ostream &os, const std::vector<SummaryRow> &rows);
std::vector<SummaryRow> read_summary_json(std::istream &is);

/// Dispatches on the first non-blank character ('{' means JSON).
std::vector<SummaryRow> read_summary(std::istream &is);

void write_histogram_csv(std::ostream &os, const Histogram &h);
Histogram read_histogram_csv(std::istream &is, Field field = Field::Purity);
void write_histogram_json(std::ostream &os, const Histogram &h);
Histogram read_histogram_json(std::istream &is);

void write_scatter_csv(std::ostream &os, const std::vector<ScatterPoint> &points);
void write_typical_csv(std::ostream &os, const std::vector<TypicalPoint> &typical);

/// Fit report; purity residuals are included when non-empty.
void write_fit_json(std::ostream &os, const FitResult &fr,
                    const std::vector<PurityResidual> &purity = {});
FitResult read_fit_json(std::istream &is, std::vector<PurityResidual> *purity = nullptr);

}  // namespace truncg::io
