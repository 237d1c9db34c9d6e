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

#include "sparsebench/recovery.hpp"

#include <cmath>
#include <limits>

#include "sparsebench/errors.hpp"

namespace sparsebench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lexicographically next r-combination of {0,...,n-1}; false when done.
bool next_combination(std::vector<int>* comb, int n) {
  const int r = static_cast<int>(comb->size());
  for (int i = r - 1; i >= 0; --i) {
    if ((*comb)[i] < n - r + i) {
      ++(*comb)[i];
      for (int j = i + 1; j < r; ++j) (*comb)[j] = (*comb)[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

LinearProgram make_basis_pursuit_lp(const RealMatrix& phi,
                                    const RealVector& y) {
  const Eigen::Index k = phi.rows();
  const Eigen::Index n = phi.cols();
  if (y.size() != k) {
    throw DimensionError("basis_pursuit: y has " + std::to_string(y.size()) +
                         " entries, phi has " + std::to_string(k) + " rows");
  }
  LinearProgram lp;
  lp.c = RealVector::Ones(2 * n);
  lp.A.resize(k, 2 * n);
  lp.A.leftCols(n) = phi;
  lp.A.rightCols(n) = -phi;
  lp.b = y;
  lp.lower = RealVector::Zero(2 * n);
  lp.upper = RealVector::Constant(2 * n, kInf);
  return lp;
}

BPResult basis_pursuit(const RealMatrix& phi, const RealVector& y) {
  const Eigen::Index n = phi.cols();
  const LinearProgram lp = make_basis_pursuit_lp(phi, y);
  const LPSolution sol = solve_lp(lp);
  if (sol.status == LPStatus::infeasible) {
    throw InfeasibleError("basis_pursuit: the system phi f = y is infeasible");
  }
  BPResult result;
  result.status = sol.status;
  result.iterations = sol.iterations;
  result.f = RealVector::Zero(n);
  if (sol.status != LPStatus::optimal) return result;

  RealVector f = sol.primal.head(n) - sol.primal.tail(n);
  const double threshold = 1e-7 * std::max(1.0, f.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(f(i)) <= threshold) f(i) = 0.0;
  }
  result.f = std::move(f);
  result.objective = result.f.lpNorm<1>();
  result.residual = y.size() > 0
                        ? (phi * result.f - y).cwiseAbs().maxCoeff()
                        : 0.0;
  const double yscale = y.size() > 0 ? y.cwiseAbs().maxCoeff() : 0.0;
  if (result.residual > 1e-8 * (1.0 + yscale)) {
    result.status = LPStatus::numerical_failure;
  }
  return result;
}

L0Result l0_oracle(const RealMatrix& phi, const RealVector& y, int r_max) {
  const int k = static_cast<int>(phi.rows());
  const int n = static_cast<int>(phi.cols());
  if (y.size() != k) {
    throw DimensionError("l0_oracle: dimension mismatch between phi and y");
  }
  if (n > 24 || r_max > 4 || r_max < 0) {
    throw ParameterError(
        "l0_oracle: enumeration requires n <= 24 and 0 <= r_max <= 4");
  }
  const double tol = 1e-8 * (1.0 + (k > 0 ? y.cwiseAbs().maxCoeff() : 0.0));

  if (y.cwiseAbs().maxCoeff() <= tol) {
    return {RealVector::Zero(n), {}};
  }
  for (int r = 1; r <= std::min(r_max, n); ++r) {
    std::vector<int> comb(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    do {
      RealMatrix sub(k, r);
      for (int i = 0; i < r; ++i) sub.col(i) = phi.col(comb[i]);
      const RealVector coeff = sub.colPivHouseholderQr().solve(y);
      if ((sub * coeff - y).cwiseAbs().maxCoeff() <= tol) {
        RealVector f0 = RealVector::Zero(n);
        for (int i = 0; i < r; ++i) f0(comb[i]) = coeff(i);
        return {std::move(f0), comb};
      }
    } while (next_combination(&comb, n));
  }
  throw NotFoundError("l0_oracle: no solution with support size <= " +
                      std::to_string(r_max));
}

RecoveryVerdict verify_recovery(const RealVector& f, const BPResult& result,
                                double tol) {
  if (result.f.size() != f.size()) {
    throw DimensionError("verify_recovery: dimension mismatch");
  }
  if (result.status != LPStatus::optimal) return RecoveryVerdict::failed;
  const double err = (result.f - f).norm();
  return err <= tol * std::max(1.0, f.norm()) ? RecoveryVerdict::exact
                                              : RecoveryVerdict::failed;
}

RecoveryVerdict verify_recovery(const Signal& f, const BPResult& result,
                                double tol) {
  return verify_recovery(f.values, result, tol);
}

}  // namespace sparsebench
