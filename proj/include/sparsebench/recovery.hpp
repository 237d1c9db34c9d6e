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

#ifndef SPARSEBENCH_RECOVERY_HPP_
#define SPARSEBENCH_RECOVERY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "sparsebench/ensembles.hpp"
#include "sparsebench/numerics.hpp"

namespace sparsebench {

// min c'x  subject to  A x = b,  lower <= x <= upper  (entries may be
// -inf / +inf; lower == upper pins a variable).
struct LinearProgram {
  RealVector c;
  RealMatrix A;
  RealVector b;
  RealVector lower;
  RealVector upper;
};

enum class LPStatus { optimal, infeasible, unbounded, numerical_failure };

struct LPSolution {
  RealVector primal;
  RealVector dual;           // one multiplier per row of A
  double objective = 0.0;
  double duality_gap = 0.0;  // absolute gap at termination
  LPStatus status = LPStatus::numerical_failure;
  int iterations = 0;
  // (primal objective, dual objective) at each interior-point iterate.
  std::vector<std::pair<double, double>> trace;
};

// Primal-dual path-following solver (Mehrotra predictor-corrector) on a
// dense normal-equations factorization.  Dependent equality rows are
// dropped after a consistency check; status=optimal certifies a relative
// duality gap <= 1e-9 and primal infeasibility <= 1e-9 * (1 + max|b|).
LPSolution solve_lp(const LinearProgram& lp);

std::string lp_status_name(LPStatus status);

// Serializes an LP as labeled plain-text blocks "c", "A", "b", "bounds"
// (one "lower upper" line per variable, infinities spelled -inf / inf).
void write_lp_file(const std::string& path, const LinearProgram& lp);

struct BPResult {
  RealVector f;            // recovered signal
  double objective = 0.0;  // l1 norm of f
  LPStatus status = LPStatus::numerical_failure;
  double residual = 0.0;   // max|phi f - y|
  int iterations = 0;
};

// The l1-minimization LP for phi f = y in split form: variables (u, v) >= 0
// with f = u - v, equality block [phi, -phi], all-ones objective.
LinearProgram make_basis_pursuit_lp(const RealMatrix& phi,
                                    const RealVector& y);

// Minimum-l1-norm solution of phi f = y.  Complex measurement systems must
// pass through realify first.  Entries with magnitude <= 1e-7 * max(1,
// max|f|) are rounded to zero so exactness claims have a clean support.
// Throws InfeasibleError when phi f = y has no solution; a solver failure
// is reported through the status field.
BPResult basis_pursuit(const RealMatrix& phi, const RealVector& y);

struct L0Result {
  RealVector f0;
  std::vector<int> support;
};

// Exhaustive minimum-support solution of phi f = y: supports of size
// 0, 1, ..., r_max are enumerated in lexicographic order and tested by
// least squares; the first support with residual <= 1e-8 * (1 + max|y|)
// wins.  Requires n <= 24 and r_max <= 4.
L0Result l0_oracle(const RealMatrix& phi, const RealVector& y, int r_max);

enum class RecoveryVerdict { exact, failed };

// exact iff result.status is optimal and |f* - f|_2 <= tol * max(1, |f|_2).
RecoveryVerdict verify_recovery(const RealVector& f, const BPResult& result,
                                double tol = 1e-6);
RecoveryVerdict verify_recovery(const Signal& f, const BPResult& result,
                                double tol = 1e-6);

}  // namespace sparsebench

#endif  // SPARSEBENCH_RECOVERY_HPP_
