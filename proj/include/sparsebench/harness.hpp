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

#ifndef SPARSEBENCH_HARNESS_HPP_
#define SPARSEBENCH_HARNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sparsebench/ensembles.hpp"
#include "sparsebench/numerics.hpp"

namespace sparsebench {

struct PhaseGrid {
  EnsembleKind ensemble = EnsembleKind::gaussian;
  AmplitudeModel amplitude = AmplitudeModel::rademacher;
  std::vector<int> n_list;
  std::vector<int> r_list;
  int k_min = 1;
  int k_max = 1;
  int k_step = 1;
  int trials = 50;
  std::uint64_t seed = 0;
  // Source orthogonal matrix for the bounded-orthogonal ensemble; complex
  // matrices are realified before the solve, as Fourier rows are.
  std::optional<AnyMatrix> ortho_u;
};

struct PhaseCell {
  std::string ensemble;
  int n = 0;
  int r = 0;
  int k = 0;
  int trials = 0;
  int successes = 0;
  int failures = 0;
  int solver_failures = 0;
  double success_rate = 0.0;
  double mean_l2_error = 0.0;  // over trials with an optimal solve
  std::uint64_t seed = 0;
};

struct PhaseTable {
  std::vector<PhaseCell> rows;  // sorted by (ensemble, n, r, k)
};

struct KStarRow {
  std::string ensemble;
  int n = 0;
  int r = 0;
  bool present = false;  // a plateau at the threshold exists in the grid
  int k_star = 0;
  double bound = 0.0;  // Gaussian sample-complexity value, or r ln n units
  double ratio = 0.0;  // k_star / bound, when present
};

struct KStarReport {
  double threshold = 0.9;
  std::vector<KStarRow> rows;
};

std::string ensemble_name(EnsembleKind kind);

// Runs trials x (sample matrix, sample signal, l1 recovery, verification)
// per grid cell.  Deterministic for a fixed grid: every trial derives its
// matrix and signal streams from (cell coordinates, trial index).
PhaseTable run_phase_transition(const PhaseGrid& grid);

// Smallest grid k whose success rate and every larger k's rate reach the
// threshold (plateau rule); cells without a plateau are marked absent.
KStarReport empirical_k_star(const PhaseTable& table, double threshold = 0.9);

// CSV with the exact header
// ensemble,n,r,k,trials,successes,failures,solver_failures,success_rate,mean_l2_error,seed
std::string phase_csv_string(const PhaseTable& table);
PhaseTable parse_phase_csv(const std::string& content);
void export_csv(const PhaseTable& table, const std::string& path);
void export_csv(const KStarReport& report, const std::string& path);

// Success-rate-vs-k polyline per (n, r) with a vertical marker at the
// bound column value.
std::string phase_svg_string(const PhaseTable& table);
void export_svg(const PhaseTable& table, const std::string& path);

// True when some cell has solver failures above 10% of its trials (the
// CLI maps this to exit code 2).
bool solver_failure_budget_exceeded(const PhaseTable& table);

}  // namespace sparsebench

#endif  // SPARSEBENCH_HARNESS_HPP_
