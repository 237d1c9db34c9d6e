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

#ifndef SPARSEBENCH_NUMERICS_HPP_
#define SPARSEBENCH_NUMERICS_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sparsebench {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

// Smallest and largest eigenvalue of a symmetric / Hermitian matrix.
// The input is symmetrized before solving; deviation from symmetry larger
// than 1e-10 relative to the magnitude scale is a validation error.
std::pair<double, double> extreme_eigenvalues(const RealMatrix& G);
std::pair<double, double> extreme_eigenvalues(const ComplexMatrix& G);

// Orthonormal basis of the null space of a full-row-rank k x n matrix,
// k < n, returned as the n x (n-k) matrix of basis columns.
RealMatrix kernel_basis(const RealMatrix& M);

struct SortedAbs {
  RealVector values;              // magnitudes, non-increasing
  std::vector<int> permutation;   // permutation[p] = original index of values[p]
};

// Magnitudes sorted non-increasingly; ties broken by lower original index.
SortedAbs sorted_abs_desc(const RealVector& x);

// Deterministic counter-based random stream.  Equal (seed, stream_id)
// reproduce the identical draw sequence on every platform; distinct
// stream ids give statistically independent streams for one seed.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  double uniform();                       // [0, 1)
  double normal();                        // N(0, 1), Box-Muller
  std::uint64_t uniform_int(std::uint64_t bound);  // [0, bound), bound >= 1
  // Uniform k-subset of {0,...,n-1}, returned sorted ascending.
  std::vector<int> k_subset(int n, int k);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_;
  std::uint64_t gamma_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

// FNV-1a on the bytes of a task tag; stable across platforms.
std::uint64_t fnv1a64(std::string_view data);

// Stream id for (task-tag, trial); extra values fold in further coordinates
// (cell indices) so that per-trial streams are order-independent.
std::uint64_t derive_stream_id(std::string_view task_tag, std::uint64_t trial);
std::uint64_t derive_stream_id(std::string_view task_tag,
                               std::initializer_list<std::uint64_t> coords);

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double value);

// Plain-text matrix file: first line "rows,cols,field" with field in
// {real, complex}; then one comma-separated line per row, complex entries
// written as "a+bi".
using AnyMatrix = std::variant<RealMatrix, ComplexMatrix>;
void write_matrix_file(const std::string& path, const RealMatrix& M);
void write_matrix_file(const std::string& path, const ComplexMatrix& M);
AnyMatrix read_matrix_file(const std::string& path);

}  // namespace sparsebench

#endif  // SPARSEBENCH_NUMERICS_HPP_
