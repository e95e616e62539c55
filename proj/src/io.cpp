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

#include "truncg/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "truncg/error.hpp"

namespace truncg::io {

namespace {

using nlohmann::json;

constexpr const char *kRecordsHeader = "N,purity_rho,purity_tau,overlap,nong,sympl";
constexpr const char *kSummaryHeader =
    "N,count,purity_rho_mean,purity_rho_std,purity_tau_mean,purity_tau_std,overlap_mean,"
    "overlap_std,nong_mean,nong_std,sympl_mean,sympl_std";
constexpr const char *kHistogramHeader = "bin_left,bin_right,count";

std::string json_number(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::Numerical, "non-finite value in JSON output");
  return format_double(x);
}

std::vector<std::string> split_csv(const std::string &line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string &s) {
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorKind::Parse, "not a number: '" + s + "'");
  }
  return v;
}

std::size_t parse_size(const std::string &s) {
  char *end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (s.empty() || s[0] == '-' || end != s.c_str() + s.size()) {
    throw Error(ErrorKind::Parse, "not a non-negative integer: '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

// Reads header plus rows of exactly `columns` cells. Tolerates a trailing CR.
std::vector<std::vector<std::string>> read_table(std::istream &is, const std::string &header,
                                                 std::size_t columns) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::Parse, "missing CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw Error(ErrorKind::Parse, "unexpected CSV header '" + line + "'");
  std::vector<std::vector<std::string>> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv(line);
    if (cells.size() != columns) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(columns) + " columns");
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

json parse_json(std::istream &is) {
  try {
    return json::parse(is);
  } catch (const json::exception &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

void expect_schema(const json &j, const char *schema) {
  if (!j.is_object() || j.value("schema", "") != schema) {
    throw Error(ErrorKind::Parse, std::string("expected schema ") + schema);
  }
}

Stat stat_from_json(const json &j) { return {j.at("mean").get<double>(), j.at("std").get<double>()}; }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_records_csv(std::ostream &os, const std::vector<SampleRecord> &records) {
  os << kRecordsHeader << '\n';
  for (const auto &r : records) {
    os << r.n_max << ',' << format_double(r.purity_rho) << ',' << format_double(r.purity_tau)
       << ',' << format_double(r.overlap) << ',' << format_double(r.non_gaussianity) << ','
       << format_double(r.sympl_eig) << '\n';
  }
}

std::vector<SampleRecord> read_records_csv(std::istream &is) {
  std::vector<SampleRecord> out;
  for (const auto &c : read_table(is, kRecordsHeader, 6)) {
    SampleRecord r;
    r.n_max = parse_size(c[0]);
    r.purity_rho = parse_double(c[1]);
    r.purity_tau = parse_double(c[2]);
    r.overlap = parse_double(c[3]);
    r.non_gaussianity = parse_double(c[4]);
    r.sympl_eig = parse_double(c[5]);
    out.push_back(r);
  }
  return out;
}

void write_summary_csv(std::ostream &os, const std::vector<SummaryRow> &rows) {
  os << kSummaryHeader << '\n';
  for (const auto &r : rows) {
    os << r.n_max << ',' << r.count;
    for (const Stat *s : {&r.purity_rho, &r.purity_tau, &r.overlap, &r.non_gaussianity,
                          &r.sympl_eig}) {
      os << ',' << format_double(s->mean) << ',' << format_double(s->std);
    }
    os << '\n';
  }
}

std::vector<SummaryRow> read_summary_csv(std::istream &is) {
  std::vector<SummaryRow> out;
  for (const auto &c : read_table(is, kSummaryHeader, 12)) {
    SummaryRow r;
    r.n_max = parse_size(c[0]);
    r.count = parse_size(c[1]);
    Stat *stats[] = {&r.purity_rho, &r.purity_tau, &r.overlap, &r.non_gaussianity, &r.sympl_eig};
    for (std::size_t k = 0; k < 5; ++k) {
      stats[k]->mean = parse_double(c[2 + 2 * k]);
      stats[k]->std = parse_double(c[3 + 2 * k]);
    }
    out.push_back(r);
  }
  return out;
}

void write_summary_json(std::ostream &os, const std::vector<SummaryRow> &rows) {
  os << "{\"schema\": \"truncg.summary/1\", \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &r = rows[i];
    os << (i ? ",\n  " : "\n  ") << "{\"N\": " << r.n_max << ", \"count\": " << r.count;
    const std::pair<const char *, const Stat *> stats[] = {
        {"purity_rho", &r.purity_rho}, {"purity_tau", &r.purity_tau}, {"overlap", &r.overlap},
        {"nong", &r.non_gaussianity},  {"sympl", &r.sympl_eig}};
    for (const auto &[name, s] : stats) {
      os << ", \"" << name << "\": {\"mean\": " << json_number(s->mean)
         << ", \"std\": " << json_number(s->std) << '}';
    }
    os << '}';
  }
  os << (rows.empty() ? "]}\n" : "\n]}\n");
}

std::vector<SummaryRow> read_summary_json(std::istream &is) {
  const json j = parse_json(is);
  expect_schema(j, "truncg.summary/1");
  std::vector<SummaryRow> out;
  try {
    for (const auto &row : j.at("rows")) {
      SummaryRow r;
      r.n_max = row.at("N").get<std::size_t>();
      r.count = row.at("count").get<std::size_t>();
      r.purity_rho = stat_from_json(row.at("purity_rho"));
      r.purity_tau = stat_from_json(row.at("purity_tau"));
      r.overlap = stat_from_json(row.at("overlap"));
      r.non_gaussianity = stat_from_json(row.at("nong"));
      r.sympl_eig = stat_from_json(row.at("sympl"));
      out.push_back(r);
    }
  } catch (const json::exception &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return out;
}

std::vector<SummaryRow> read_summary(std::istream &is) {
  is >> std::ws;
  if (is.peek() == '{') return read_summary_json(is);
  return read_summary_csv(is);
}

void write_histogram_csv(std::ostream &os, const Histogram &h) {
  os << kHistogramHeader << '\n';
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    os << format_double(h.bin_edges[i]) << ',' << format_double(h.bin_edges[i + 1]) << ','
       << h.counts[i] << '\n';
  }
}

Histogram read_histogram_csv(std::istream &is, Field field) {
  Histogram h;
  h.field = field;
  const auto rows = read_table(is, kHistogramHeader, 3);
  if (rows.empty()) throw Error(ErrorKind::Parse, "histogram has no bins");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double left = parse_double(rows[i][0]);
    if (i > 0 && left != h.bin_edges.back()) throw Error(ErrorKind::Parse, "bins are not contiguous");
    if (i == 0) h.bin_edges.push_back(left);
    h.bin_edges.push_back(parse_double(rows[i][1]));
    h.counts.push_back(parse_size(rows[i][2]));
  }
  return h;
}

void write_histogram_json(std::ostream &os, const Histogram &h) {
  os << "{\"schema\": \"truncg.histogram/1\", \"field\": \"" << to_string(h.field)
     << "\", \"bin_edges\": [";
  for (std::size_t i = 0; i < h.bin_edges.size(); ++i) {
    os << (i ? ", " : "") << json_number(h.bin_edges[i]);
  }
  os << "], \"counts\": [";
  for (std::size_t i = 0; i < h.counts.size(); ++i) os << (i ? ", " : "") << h.counts[i];
  os << "]}\n";
}

Histogram read_histogram_json(std::istream &is) {
  const json j = parse_json(is);
  expect_schema(j, "truncg.histogram/1");
  Histogram h;
  try {
    h.field = parse_field(j.at("field").get<std::string>());
    h.bin_edges = j.at("bin_edges").get<std::vector<double>>();
    h.counts = j.at("counts").get<std::vector<std::size_t>>();
  } catch (const json::exception &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (h.bin_edges.size() != h.counts.size() + 1) {
    throw Error(ErrorKind::Parse, "histogram edges and counts disagree");
  }
  return h;
}

void write_scatter_csv(std::ostream &os, const std::vector<ScatterPoint> &points) {
  os << "N,purity,nong\n";
  for (const auto &p : points) {
    os << p.n_max << ',' << format_double(p.purity) << ',' << format_double(p.nong) << '\n';
  }
}

void write_typical_csv(std::ostream &os, const std::vector<TypicalPoint> &typical) {
  os << "N,count,purity_mean,nong_mean\n";
  for (const auto &t : typical) {
    os << t.n_max << ',' << t.count << ',' << format_double(t.purity) << ','
       << format_double(t.nong) << '\n';
  }
}

void write_fit_json(std::ostream &os, const FitResult &fr,
                    const std::vector<PurityResidual> &purity) {
  os << "{\"schema\": \"truncg.fit/1\", \"c1\": " << json_number(fr.c1)
     << ", \"c2\": " << json_number(fr.c2) << ", \"rss\": " << json_number(fr.rss)
     << ", \"grid_unimodal\": " << (fr.grid_unimodal ? "true" : "false") << ",\n \"nong_residuals\": [";
  for (std::size_t i = 0; i < fr.n_values.size(); ++i) {
    os << (i ? ", " : "") << "{\"N\": " << fr.n_values[i]
       << ", \"residual\": " << json_number(fr.per_point_residuals[i]) << '}';
  }
  os << "],\n \"purity_residuals\": [";
  for (std::size_t i = 0; i < purity.size(); ++i) {
    os << (i ? ", " : "") << "{\"N\": " << purity[i].n_max
       << ", \"residual\": " << json_number(purity[i].residual)
       << ", \"std_error\": " << json_number(purity[i].std_error) << '}';
  }
  os << "]}\n";
}

FitResult read_fit_json(std::istream &is, std::vector<PurityResidual> *purity) {
  const json j = parse_json(is);
  expect_schema(j, "truncg.fit/1");
  FitResult fr;
  try {
    fr.c1 = j.at("c1").get<double>();
    fr.c2 = j.at("c2").get<double>();
    fr.rss = j.at("rss").get<double>();
    fr.grid_unimodal = j.at("grid_unimodal").get<bool>();
    for (const auto &p : j.at("nong_residuals")) {
      fr.n_values.push_back(p.at("N").get<std::size_t>());
      fr.per_point_residuals.push_back(p.at("residual").get<double>());
    }
    if (purity) {
      purity->clear();
      for (const auto &p : j.at("purity_residuals")) {
        purity->push_back({p.at("N").get<std::size_t>(), p.at("residual").get<double>(),
                           p.at("std_error").get<double>()});
      }
    }
  } catch (const json::exception &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return fr;
}

}  // namespace truncg::io
