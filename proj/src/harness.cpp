// Copyright 2026 The sparsebench Authors
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

#include "sparsebench/harness.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sparsebench/errors.hpp"
#include "sparsebench/geometry.hpp"
#include "sparsebench/recovery.hpp"

namespace sparsebench {

namespace {

const char kCsvHeader[] =
    "ensemble,n,r,k,trials,successes,failures,solver_failures,success_rate,"
    "mean_l2_error,seed";

std::vector<int> sorted_unique(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void validate_grid(const PhaseGrid& grid, const std::vector<int>& n_list,
                   const std::vector<int>& r_list) {
  if (n_list.empty() || r_list.empty()) {
    throw ParameterError("phase grid: n and r lists must be nonempty");
  }
  if (grid.k_min < 1 || grid.k_min > grid.k_max || grid.k_step < 1) {
    throw ParameterError("phase grid: need 1 <= k_min <= k_max, k_step >= 1");
  }
  if (grid.trials < 1) {
    throw ParameterError("phase grid: need at least one trial per cell");
  }
  for (const int n : n_list) {
    if (grid.k_max > n) {
      throw ParameterError("phase grid: k range exceeds n=" +
                           std::to_string(n));
    }
    for (const int r : r_list) {
      if (r < 1 || r > n) {
        throw ParameterError("phase grid: need 1 <= r <= n");
      }
    }
  }
  if (grid.ensemble == EnsembleKind::bounded_orthogonal) {
    if (!grid.ortho_u.has_value()) {
      throw ParameterError(
          "phase grid: bounded-orthogonal runs need a source matrix");
    }
    const Eigen::Index dim =
        std::holds_alternative<RealMatrix>(*grid.ortho_u)
            ? std::get<RealMatrix>(*grid.ortho_u).rows()
            : std::get<ComplexMatrix>(*grid.ortho_u).rows();
    for (const int n : n_list) {
      if (n != dim) {
        throw ParameterError(
            "phase grid: n must match the source matrix dimension " +
            std::to_string(dim));
      }
    }
  }
}

struct TrialSystem {
  RealMatrix phi;
  RealVector y;
};

TrialSystem build_system(const PhaseGrid& grid, int n, int k,
                         const RealVector& f, RngStream& rng) {
  TrialSystem sys;
  switch (grid.ensemble) {
    case EnsembleKind::gaussian:
      sys.phi = sample_gaussian(k, n, rng);
      break;
    case EnsembleKind::partial_fourier:
      sys.phi = realify(sample_partial_fourier(k, n, rng).matrix);
      break;
    case EnsembleKind::bounded_orthogonal:
      if (std::holds_alternative<RealMatrix>(*grid.ortho_u)) {
        sys.phi = sample_rows(std::get<RealMatrix>(*grid.ortho_u), k, rng)
                      .matrix;
      } else {
        sys.phi = realify(
            sample_rows(std::get<ComplexMatrix>(*grid.ortho_u), k, rng)
                .matrix);
      }
      break;
  }
  sys.y = sys.phi * f;
  return sys;
}

void append_double(std::string* out, double value) {
  *out += format_double(value);
}

long parse_long(std::string_view token, const char* what) {
  long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ValidationError("phase CSV: bad " + std::string(what) + " field '" +
                          std::string(token) + "'");
  }
  return value;
}

double parse_double_field(std::string_view token, const char* what) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ValidationError("phase CSV: bad " + std::string(what) + " field '" +
                          std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double bound_for(const std::string& ensemble, int n, int r) {
  if (ensemble == "gaussian") return sample_complexity_gaussian(r, n);
  return r * std::log(static_cast<double>(n));
}

}  // namespace

std::string ensemble_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::gaussian: return "gaussian";
    case EnsembleKind::partial_fourier: return "fourier";
    case EnsembleKind::bounded_orthogonal: return "ortho";
  }
  return "unknown";
}

PhaseTable run_phase_transition(const PhaseGrid& grid) {
  const std::vector<int> n_list = sorted_unique(grid.n_list);
  const std::vector<int> r_list = sorted_unique(grid.r_list);
  validate_grid(grid, n_list, r_list);
  const std::string name = ensemble_name(grid.ensemble);

  PhaseTable table;
  for (const int n : n_list) {
    for (const int r : r_list) {
      if (grid.k_min < 2 * r) {
        std::cerr << "warning: grid includes k < 2r for n=" << n
                  << ", r=" << r
                  << "; no method can recover there, proceeding\n";
      }
      for (int k = grid.k_min; k <= grid.k_max; k += grid.k_step) {
        PhaseCell cell;
        cell.ensemble = name;
        cell.n = n;
        cell.r = r;
        cell.k = k;
        cell.trials = grid.trials;
        cell.seed = grid.seed;
        double err_sum = 0.0;
        int err_count = 0;
        for (int t = 0; t < grid.trials; ++t) {
          const std::initializer_list<std::uint64_t> coords = {
              static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r),
              static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t)};
          RngStream matrix_rng(grid.seed,
                               derive_stream_id("phase/matrix", coords));
          RngStream signal_rng(grid.seed,
                               derive_stream_id("phase/signal", coords));
          const Signal f =
              sample_sparse_signal({n, r, grid.amplitude}, signal_rng);
          const TrialSystem sys =
              build_system(grid, n, k, f.values, matrix_rng);
          try {
            const BPResult bp = basis_pursuit(sys.phi, sys.y);
            if (bp.status == LPStatus::optimal) {
              err_sum += (bp.f - f.values).norm();
              ++err_count;
              if (verify_recovery(f, bp) == RecoveryVerdict::exact) {
                ++cell.successes;
              } else {
                ++cell.failures;
              }
            } else {
              ++cell.solver_failures;
            }
          } catch (const InfeasibleError&) {
            ++cell.solver_failures;
          }
        }
        cell.success_rate =
            static_cast<double>(cell.successes) / grid.trials;
        cell.mean_l2_error = err_count > 0 ? err_sum / err_count : 0.0;
        table.rows.push_back(std::move(cell));
      }
    }
  }
  return table;
}

KStarReport empirical_k_star(const PhaseTable& table, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw ParameterError("empirical_k_star: threshold must lie in (0, 1)");
  }
  KStarReport report;
  report.threshold = threshold;
  std::size_t i = 0;
  while (i < table.rows.size()) {
    const auto& head = table.rows[i];
    std::size_t j = i;
    while (j < table.rows.size() && table.rows[j].ensemble == head.ensemble &&
           table.rows[j].n == head.n && table.rows[j].r == head.r) {
      ++j;
    }
    // Plateau rule: smallest k from which every rate stays at or above the
    // threshold.
    std::size_t plateau = j;
    for (std::size_t p = j; p-- > i;) {
      if (table.rows[p].success_rate >= threshold) {
        plateau = p;
      } else {
        break;
      }
    }
    KStarRow row;
    row.ensemble = head.ensemble;
    row.n = head.n;
    row.r = head.r;
    row.bound = bound_for(head.ensemble, head.n, head.r);
    if (plateau < j) {
      row.present = true;
      row.k_star = table.rows[plateau].k;
      row.ratio = row.k_star / row.bound;
    }
    report.rows.push_back(std::move(row));
    i = j;
  }
  return report;
}

std::string phase_csv_string(const PhaseTable& table) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : table.rows) {
    out += row.ensemble;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.r);
    out += ',';
    out += std::to_string(row.k);
    out += ',';
    out += std::to_string(row.trials);
    out += ',';
    out += std::to_string(row.successes);
    out += ',';
    out += std::to_string(row.failures);
    out += ',';
    out += std::to_string(row.solver_failures);
    out += ',';
    append_double(&out, row.success_rate);
    out += ',';
    append_double(&out, row.mean_l2_error);
    out += ',';
    out += std::to_string(row.seed);
    out += '\n';
  }
  return out;
}

PhaseTable parse_phase_csv(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ValidationError("phase CSV: missing or mismatched header");
  }
  PhaseTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 11) {
      throw ValidationError("phase CSV: expected 11 fields, got " +
                            std::to_string(fields.size()));
    }
    PhaseCell cell;
    cell.ensemble = std::string(fields[0]);
    cell.n = static_cast<int>(parse_long(fields[1], "n"));
    cell.r = static_cast<int>(parse_long(fields[2], "r"));
    cell.k = static_cast<int>(parse_long(fields[3], "k"));
    cell.trials = static_cast<int>(parse_long(fields[4], "trials"));
    cell.successes = static_cast<int>(parse_long(fields[5], "successes"));
    cell.failures = static_cast<int>(parse_long(fields[6], "failures"));
    cell.solver_failures =
        static_cast<int>(parse_long(fields[7], "solver_failures"));
    cell.success_rate = parse_double_field(fields[8], "success_rate");
    cell.mean_l2_error = parse_double_field(fields[9], "mean_l2_error");
    cell.seed = static_cast<std::uint64_t>(parse_long(fields[10], "seed"));
    table.rows.push_back(std::move(cell));
  }
  return table;
}

void export_csv(const PhaseTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << phase_csv_string(table);
  if (!out) throw IoError("write failed for " + path);
}

void export_csv(const KStarReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "ensemble,n,r,threshold,k_star,bound,ratio\n";
  for (const auto& row : report.rows) {
    out << row.ensemble << ',' << row.n << ',' << row.r << ','
        << format_double(report.threshold) << ',';
    if (row.present) {
      out << row.k_star << ',' << format_double(row.bound) << ','
          << format_double(row.ratio) << '\n';
    } else {
      out << "absent," << format_double(row.bound) << ",absent\n";
    }
  }
  if (!out) throw IoError("write failed for " + path);
}

std::string phase_svg_string(const PhaseTable& table) {
  const double width = 880, height = 540;
  const double left = 70, right = width - 210, top = 30, bottom = height - 60;
  int k_lo = INT_MAX, k_hi = INT_MIN;
  for (const auto& row : table.rows) {
    k_lo = std::min(k_lo, row.k);
    k_hi = std::max(k_hi, row.k);
  }
  if (table.rows.empty()) {
    k_lo = 0;
    k_hi = 1;
  }
  if (k_lo == k_hi) k_hi = k_lo + 1;
  const auto x_of = [&](double k) {
    return left + (k - k_lo) / (k_hi - k_lo) * (right - left);
  };
  const auto y_of = [&](double rate) {
    return bottom - rate * (bottom - top);
  };
  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                           "#9467bd", "#ff7f0e", "#8c564b"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  // Axes and y ticks.
  svg << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double rate = tick / 4.0;
    svg << "<line x1=\"" << left - 4 << "\" y1=\"" << y_of(rate)
        << "\" x2=\"" << left << "\" y2=\"" << y_of(rate)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << left - 8 << "\" y=\"" << y_of(rate) + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << format_double(rate)
        << "</text>\n";
  }
  svg << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 15
      << "\" font-size=\"13\" text-anchor=\"middle\">measurements k"
      << "</text>\n";
  svg << "<text x=\"18\" y=\"" << (top + bottom) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 "
      << (top + bottom) / 2 << ")\">success rate</text>\n";

  // One polyline and one bound marker per (n, r) group.
  std::size_t i = 0;
  int group = 0;
  while (i < table.rows.size()) {
    std::size_t j = i;
    const auto& head = table.rows[i];
    while (j < table.rows.size() && table.rows[j].ensemble == head.ensemble &&
           table.rows[j].n == head.n && table.rows[j].r == head.r) {
      ++j;
    }
    const char* color = palette[group % 6];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t p = i; p < j; ++p) {
      svg << x_of(table.rows[p].k) << ',' << y_of(table.rows[p].success_rate)
          << ' ';
    }
    svg << "\"/>\n";
    for (std::size_t p = i; p < j; ++p) {
      svg << "<circle cx=\"" << x_of(table.rows[p].k) << "\" cy=\""
          << y_of(table.rows[p].success_rate) << "\" r=\"3\" fill=\"" << color
          << "\"/>\n";
    }
    const double bound = bound_for(head.ensemble, head.n, head.r);
    const double legend_y = top + 20 + 40 * group;
    svg << "<text x=\"" << right + 16 << "\" y=\"" << legend_y
        << "\" font-size=\"12\" fill=\"" << color << "\">" << head.ensemble
        << " n=" << head.n << " r=" << head.r << "</text>\n";
    if (bound >= k_lo && bound <= k_hi) {
      svg << "<line x1=\"" << x_of(bound) << "\" y1=\"" << top << "\" x2=\""
          << x_of(bound) << "\" y2=\"" << bottom << "\" stroke=\"" << color
          << "\" stroke-dasharray=\"6 4\"/>\n";
      svg << "<text x=\"" << right + 16 << "\" y=\"" << legend_y + 16
          << "\" font-size=\"11\" fill=\"" << color << "\">bound "
          << format_double(bound) << "</text>\n";
    } else {
      svg << "<text x=\"" << right + 16 << "\" y=\"" << legend_y + 16
          << "\" font-size=\"11\" fill=\"" << color << "\">bound "
          << format_double(bound) << " (off scale)</text>\n";
    }
    ++group;
    i = j;
  }
  // X ticks at the first group's grid points, thinned to at most 12 labels.
  if (!table.rows.empty()) {
    std::vector<int> ks;
    for (const auto& row : table.rows) ks.push_back(row.k);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    const std::size_t stride = std::max<std::size_t>(1, ks.size() / 12);
    for (std::size_t p = 0; p < ks.size(); p += stride) {
      svg << "<line x1=\"" << x_of(ks[p]) << "\" y1=\"" << bottom
          << "\" x2=\"" << x_of(ks[p]) << "\" y2=\"" << bottom + 4
          << "\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << x_of(ks[p]) << "\" y=\"" << bottom + 18
          << "\" font-size=\"12\" text-anchor=\"middle\">" << ks[p]
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void export_svg(const PhaseTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << phase_svg_string(table);
  if (!out) throw IoError("write failed for " + path);
}

bool solver_failure_budget_exceeded(const PhaseTable& table) {
  for (const auto& row : table.rows) {
    if (row.solver_failures > 0.1 * row.trials) return true;
  }
  return false;
}

}  // namespace sparsebench
