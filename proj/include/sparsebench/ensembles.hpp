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

#ifndef SPARSEBENCH_ENSEMBLES_HPP_
#define SPARSEBENCH_ENSEMBLES_HPP_

#include <vector>

#include "sparsebench/numerics.hpp"

namespace sparsebench {

enum class EnsembleKind { gaussian, partial_fourier, bounded_orthogonal };
enum class AmplitudeModel { rademacher, gaussian };

struct SparseSignalSpec {
  int n = 0;
  int r = 0;
  AmplitudeModel amplitude_model = AmplitudeModel::rademacher;
};

// Real n-vector with its support recorded (sorted ascending).
struct Signal {
  RealVector values;
  std::vector<int> support;
};

template <typename Matrix>
struct RowSample {
  Matrix matrix;
  std::vector<int> omega;  // sampled row indices, sorted ascending
};

// k x n matrix of i.i.d. standard normal entries, filled row-major.
RealMatrix sample_gaussian(int k, int n, RngStream& rng);

// The unitary discrete Fourier matrix, entries exp(-i 2 pi w t / n) / sqrt(n).
ComplexMatrix dft_matrix(int n);

// k rows of the n x n unitary DFT matrix at a uniform random k-subset of
// row indices (sampled without replacement).
RowSample<ComplexMatrix> sample_partial_fourier(int k, int n, RngStream& rng);

// Checks that U has orthonormal columns (conjugate transpose for complex)
// within 1e-8 and returns the row-boundedness constant
// K = sqrt(n) * max |U_ij|.  Throws ValidationError otherwise.
double validate_orthogonal(const RealMatrix& U);
double validate_orthogonal(const ComplexMatrix& U);

// k uniformly chosen distinct rows of an orthogonal matrix U.  Draws the
// row subset exactly as sample_partial_fourier does, so equal streams give
// equal index sets.
RowSample<RealMatrix> sample_rows(const RealMatrix& U, int k, RngStream& rng);
RowSample<ComplexMatrix> sample_rows(const ComplexMatrix& U, int k,
                                     RngStream& rng);

// Stacks Re(M) on top of Im(M): for real f, realify(M) * f = (Re Mf, Im Mf).
RealMatrix realify(const ComplexMatrix& M);

// r-sparse signal on a uniform random support with +-1 or standard normal
// amplitudes (normal draws with magnitude below 1e-12 are redrawn).
Signal sample_sparse_signal(const SparseSignalSpec& spec, RngStream& rng);

}  // namespace sparsebench

#endif  // SPARSEBENCH_ENSEMBLES_HPP_
