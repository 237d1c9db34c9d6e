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

#include "sparsebench/ensembles.hpp"

#include <cmath>
#include <numbers>

#include "sparsebench/errors.hpp"

namespace sparsebench {

namespace {

void check_k_n(int k, int n, const char* op) {
  if (n < 1 || k < 1 || k > n) {
    throw ParameterError(std::string(op) + ": need 1 <= k <= n, got k=" +
                         std::to_string(k) + ", n=" + std::to_string(n));
  }
}

std::complex<double> dft_entry(int omega, int t, int n, double scale) {
  // Reduce the phase index mod n before multiplying by 2*pi/n; keeps the
  // argument small so conjugate-row pairs cancel exactly in tests.
  const long long phase = (static_cast<long long>(omega) * t) % n;
  const double angle =
      -2.0 * std::numbers::pi * static_cast<double>(phase) / n;
  return std::polar(scale, angle);
}

template <typename Matrix>
double validate_orthogonal_impl(const Matrix& U) {
  if (U.rows() != U.cols()) {
    throw ValidationError("validate_orthogonal: matrix is " +
                          std::to_string(U.rows()) + "x" +
                          std::to_string(U.cols()) + ", expected square");
  }
  const Eigen::Index n = U.rows();
  const Matrix gram = U.adjoint() * U;
  const double defect =
      (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > 1e-8) {
    throw ValidationError(
        "validate_orthogonal: columns are not orthonormal (defect " +
        format_double(defect) + ")");
  }
  return std::sqrt(static_cast<double>(n)) * U.cwiseAbs().maxCoeff();
}

template <typename Matrix>
RowSample<Matrix> sample_rows_impl(const Matrix& U, int k, RngStream& rng) {
  validate_orthogonal_impl(U);
  const int n = static_cast<int>(U.rows());
  check_k_n(k, n, "sample_rows");
  RowSample<Matrix> out;
  out.omega = rng.k_subset(n, k);
  out.matrix.resize(k, U.cols());
  for (int i = 0; i < k; ++i) out.matrix.row(i) = U.row(out.omega[i]);
  return out;
}

}  // namespace

RealMatrix sample_gaussian(int k, int n, RngStream& rng) {
  check_k_n(k, n, "sample_gaussian");
  RealMatrix M(k, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) M(i, j) = rng.normal();
  }
  return M;
}

ComplexMatrix dft_matrix(int n) {
  if (n < 1) throw ParameterError("dft_matrix: need n >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix Psi(n, n);
  for (int omega = 0; omega < n; ++omega) {
    for (int t = 0; t < n; ++t) Psi(omega, t) = dft_entry(omega, t, n, scale);
  }
  return Psi;
}

RowSample<ComplexMatrix> sample_partial_fourier(int k, int n, RngStream& rng) {
  check_k_n(k, n, "sample_partial_fourier");
  RowSample<ComplexMatrix> out;
  out.omega = rng.k_subset(n, k);
  out.matrix.resize(k, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < k; ++i) {
    const int omega = out.omega[i];
    for (int t = 0; t < n; ++t) {
      out.matrix(i, t) = dft_entry(omega, t, n, scale);
    }
  }
  return out;
}

double validate_orthogonal(const RealMatrix& U) {
  return validate_orthogonal_impl(U);
}

double validate_orthogonal(const ComplexMatrix& U) {
  return validate_orthogonal_impl(U);
}

RowSample<RealMatrix> sample_rows(const RealMatrix& U, int k, RngStream& rng) {
  return sample_rows_impl(U, k, rng);
}

RowSample<ComplexMatrix> sample_rows(const ComplexMatrix& U, int k,
                                     RngStream& rng) {
  return sample_rows_impl(U, k, rng);
}

RealMatrix realify(const ComplexMatrix& M) {
  RealMatrix out(2 * M.rows(), M.cols());
  out.topRows(M.rows()) = M.real();
  out.bottomRows(M.rows()) = M.imag();
  return out;
}

Signal sample_sparse_signal(const SparseSignalSpec& spec, RngStream& rng) {
  if (spec.n < 1 || spec.r < 1 || spec.r > spec.n) {
    throw ParameterError("sample_sparse_signal: need 1 <= r <= n");
  }
  Signal signal;
  signal.support = rng.k_subset(spec.n, spec.r);
  signal.values = RealVector::Zero(spec.n);
  for (const int idx : signal.support) {
    if (spec.amplitude_model == AmplitudeModel::rademacher) {
      signal.values(idx) = rng.uniform() < 0.5 ? 1.0 : -1.0;
    } else {
      double amp = rng.normal();
      while (std::abs(amp) < 1e-12) amp = rng.normal();
      signal.values(idx) = amp;
    }
  }
  return signal;
}

}  // namespace sparsebench
