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

#ifndef SPARSEBENCH_RIC_HPP_
#define SPARSEBENCH_RIC_HPP_

#include <vector>

#include "sparsebench/numerics.hpp"

namespace sparsebench {

enum class RicMode { exact, sampled };

// Spectral extremes of the column-submatrix Gram matrices over supports of
// size r, with the defect-minimizing scaling C_opt = (max + min) / 2 and
// delta = (max - min) / (max + min).
struct RicReport {
  int r = 0;
  double lambda_min_global = 0.0;
  double lambda_max_global = 0.0;
  double c_opt = 0.0;
  double delta = 0.0;
  RicMode mode = RicMode::exact;
  long trials = 0;  // sampled mode only
};

// Exact mode: enumerates every size-r support (eigenvalue interlacing makes
// |T| = r cover |T| <= r).  Requires r <= rows and at most 1e6 subsets;
// larger instances get a BudgetError pointing at sampled mode.
RicReport restricted_isometry_constant(const RealMatrix& phi, int r);
RicReport restricted_isometry_constant(const ComplexMatrix& phi, int r);

// Sampled mode: `trials` uniform supports; the report is a lower bound on
// the exact extremes spread and is labeled as such via mode/trials.
RicReport restricted_isometry_constant_sampled(const RealMatrix& phi, int r,
                                               long trials, RngStream& rng);
RicReport restricted_isometry_constant_sampled(const ComplexMatrix& phi,
                                               int r, long trials,
                                               RngStream& rng);

// Verdict of the sufficient condition delta_{3r} + 3 delta_{4r} <= 2 with a
// single scaling C shared by both defects, chosen to minimize
// delta_{3r}(C) + 3 delta_{4r}(C).
struct CtReport {
  bool verdict = false;
  double delta_3r = 0.0;
  double delta_4r = 0.0;
  double shared_c = 0.0;
};

CtReport ric_condition_holds(const RealMatrix& phi, int r);
CtReport ric_condition_holds(const ComplexMatrix& phi, int r);

// sup over supports |T| <= r of the operator norm of
// id_T - (1/k) sum_{i in omega} restriction of x_i x_i^* to T, for a family
// with (1/n) sum_i x_i x_i^* = id (validated within 1e-8).
double operator_lln_deviation(const std::vector<ComplexVector>& x_vectors,
                              const std::vector<int>& omega, int r);

}  // namespace sparsebench

#endif  // SPARSEBENCH_RIC_HPP_
