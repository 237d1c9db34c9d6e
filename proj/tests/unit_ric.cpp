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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sparsebench/ensembles.hpp"
#include "sparsebench/errors.hpp"
#include "sparsebench/ric.hpp"

namespace sb = sparsebench;

namespace {

double defect_at(double c, double lo, double hi) {
  return std::max(hi / c - 1.0, 1.0 - lo / c);
}

std::vector<sb::ComplexVector> scaled_dft_rows(int n) {
  sb::ComplexMatrix psi = sb::dft_matrix(n);
  const double root = std::sqrt(static_cast<double>(n));
  std::vector<sb::ComplexVector> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    rows.push_back(root * psi.row(i).transpose());
  }
  return rows;
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_SUITE("ric") {

TEST_CASE("identity columns are a perfect isometry") {
  sb::RealMatrix eye = sb::RealMatrix::Identity(6, 6);
  sb::RicReport report = sb::restricted_isometry_constant(eye, 2);
  CHECK(report.r == 2);
  CHECK(std::abs(report.lambda_min_global - 1.0) <= 1e-12);
  CHECK(std::abs(report.lambda_max_global - 1.0) <= 1e-12);
  CHECK(std::abs(report.c_opt - 1.0) <= 1e-12);
  CHECK(report.delta <= 1e-12);
  CHECK(report.mode == sb::RicMode::exact);
}

TEST_CASE("diagonal scaling shows up as the defect") {
  sb::RealMatrix phi(2, 2);
  phi << 1.0, 0.0, 0.0, 2.0;
  sb::RicReport report = sb::restricted_isometry_constant(phi, 1);
  CHECK(std::abs(report.lambda_min_global - 1.0) <= 1e-12);
  CHECK(std::abs(report.lambda_max_global - 4.0) <= 1e-12);
  CHECK(std::abs(report.c_opt - 2.5) <= 1e-12);
  CHECK(std::abs(report.delta - 0.6) <= 1e-12);
}

TEST_CASE("the reported scaling minimizes the defect") {
  sb::RngStream rng(44, 1);
  sb::RealMatrix phi = sb::sample_gaussian(8, 12, rng);
  sb::RicReport report = sb::restricted_isometry_constant(phi, 2);
  const double lo = report.lambda_min_global;
  const double hi = report.lambda_max_global;
  CHECK(std::abs(defect_at(report.c_opt, lo, hi) - report.delta) <= 1e-12);
  CHECK(defect_at(report.c_opt * 1.01, lo, hi) >= report.delta - 1e-15);
  CHECK(defect_at(report.c_opt * 0.99, lo, hi) >= report.delta - 1e-15);
}

TEST_CASE("duplicate columns destroy restricted invertibility") {
  sb::RngStream rng(45, 1);
  sb::RealMatrix phi = sb::sample_gaussian(8, 10, rng);
  phi.col(1) = phi.col(0);
  sb::RicReport report = sb::restricted_isometry_constant(phi, 2);
  CHECK(report.lambda_min_global <= 1e-10);
  CHECK(report.delta >= 1.0 - 1e-9);
}

TEST_CASE("partial fourier columns with flat norms have zero defect at r 1") {
  sb::ComplexMatrix psi = sb::dft_matrix(8);
  sb::ComplexMatrix phi = psi.topRows(4);
  sb::RicReport report = sb::restricted_isometry_constant(phi, 1);
  // Every column of a 4-row slice has squared norm 4/8 exactly.
  CHECK(std::abs(report.lambda_min_global - 0.5) <= 1e-13);
  CHECK(std::abs(report.lambda_max_global - 0.5) <= 1e-13);
  CHECK(report.delta <= 1e-12);
}

TEST_CASE("sampled reports lower-bound the exact extremes") {
  sb::RngStream mrng(46, 1);
  sb::RealMatrix phi = sb::sample_gaussian(20, 40, mrng);
  sb::RicReport exact = sb::restricted_isometry_constant(phi, 2);
  sb::RngStream srng(46, 2);
  sb::RicReport sampled =
      sb::restricted_isometry_constant_sampled(phi, 2, 10000, srng);
  CHECK(sampled.mode == sb::RicMode::sampled);
  CHECK(sampled.trials == 10000);
  CHECK(sampled.lambda_min_global >= exact.lambda_min_global - 1e-12);
  CHECK(sampled.lambda_max_global <= exact.lambda_max_global + 1e-12);
  CHECK(sampled.delta <= exact.delta + 1e-12);
  // 1e4 draws over C(40,2) = 780 supports should come close.
  CHECK(exact.delta - sampled.delta <= 0.05);
}

TEST_CASE("enumeration budget and rank preconditions are enforced") {
  sb::RngStream rng(47, 1);
  sb::RealMatrix wide = sb::sample_gaussian(10, 50, rng);
  CHECK_THROWS_AS(sb::restricted_isometry_constant(wide, 5), sb::BudgetError);

  sb::RealMatrix shallow = sb::sample_gaussian(4, 10, rng);
  CHECK_THROWS_AS(sb::restricted_isometry_constant(shallow, 5),
                  sb::ParameterError);
  CHECK_THROWS_AS(sb::restricted_isometry_constant(shallow, 0),
                  sb::ParameterError);

  sb::RngStream srng(47, 2);
  CHECK_THROWS_AS(
      sb::restricted_isometry_constant_sampled(shallow, 2, 0, srng),
      sb::ParameterError);
}

TEST_CASE("the defect is monotone in the support size") {
  sb::RngStream rng(48, 1);
  sb::RealMatrix phi = sb::sample_gaussian(10, 14, rng);
  sb::RicReport r1 = sb::restricted_isometry_constant(phi, 1);
  sb::RicReport r2 = sb::restricted_isometry_constant(phi, 2);
  sb::RicReport r3 = sb::restricted_isometry_constant(phi, 3);
  CHECK(r1.delta <= r2.delta + 1e-12);
  CHECK(r2.delta <= r3.delta + 1e-12);
  CHECK(r1.lambda_max_global <= r2.lambda_max_global + 1e-12);
  CHECK(r2.lambda_max_global <= r3.lambda_max_global + 1e-12);
  CHECK(r1.lambda_min_global >= r2.lambda_min_global - 1e-12);
  CHECK(r2.lambda_min_global >= r3.lambda_min_global - 1e-12);
}

TEST_CASE("sufficient condition verdict on an orthonormal system") {
  sb::RealMatrix eye = sb::RealMatrix::Identity(16, 16);
  sb::CtReport report = sb::ric_condition_holds(eye, 2);
  CHECK(report.verdict);
  CHECK(report.delta_3r <= 1e-12);
  CHECK(report.delta_4r <= 1e-12);
  CHECK(report.delta_3r + 3.0 * report.delta_4r <= 2.0);
}

TEST_CASE("sufficient condition fails with duplicated columns") {
  sb::RngStream rng(49, 1);
  sb::RealMatrix phi = sb::sample_gaussian(8, 10, rng);
  phi.col(1) = phi.col(0);
  sb::CtReport report = sb::ric_condition_holds(phi, 1);
  CHECK(!report.verdict);
  CHECK(report.delta_4r >= 1.0 - 1e-9);
}

TEST_CASE("sufficient condition fails on square-aspect gaussian slices") {
  // 16 rows cannot carry delta_4 small enough at 20 columns; the shared-C
  // objective sits well above the threshold on every seed.
  for (int seed = 0; seed < 20; ++seed) {
    sb::RngStream rng(static_cast<std::uint64_t>(seed), 501);
    sb::RealMatrix phi = sb::sample_gaussian(16, 20, rng);
    sb::CtReport report = sb::ric_condition_holds(phi, 1);
    CHECK(!report.verdict);
    CHECK(report.delta_3r + 3.0 * report.delta_4r > 2.0);
  }
}

TEST_CASE("sufficient condition holds for heavily oversampled gaussians") {
  // 256 normal rows on 12 coordinates concentrate every 4-column gram
  // matrix tightly around its mean, taking the shared objective below 2.
  sb::RngStream rng(50, 1);
  sb::RealMatrix phi(256, 12);
  for (int i = 0; i < 256; ++i)
    for (int j = 0; j < 12; ++j) phi(i, j) = rng.normal();
  sb::CtReport report = sb::ric_condition_holds(phi, 1);
  CHECK(report.verdict);
  CHECK(report.delta_3r + 3.0 * report.delta_4r <= 2.0);
  CHECK(report.shared_c > 0.0);
}

TEST_CASE("sufficient condition validates the support budget") {
  sb::RngStream rng(51, 1);
  sb::RealMatrix phi = sb::sample_gaussian(10, 14, rng);
  // 4r = 12 exceeds the 10 rows, so lambda_min at size 4r is zero a priori.
  CHECK_THROWS_AS(sb::ric_condition_holds(phi, 3), sb::ParameterError);
}

TEST_CASE("operator deviation vanishes on the full index set") {
  const int n = 8;
  auto rows = scaled_dft_rows(n);
  const double dev = sb::operator_lln_deviation(rows, iota_vec(n), 3);
  CHECK(dev <= 1e-12);
}

TEST_CASE("operator deviation vanishes for singleton supports") {
  const int n = 16;
  auto rows = scaled_dft_rows(n);
  sb::RngStream rng(52, 1);
  std::vector<int> omega = rng.k_subset(n, 5);
  const double dev = sb::operator_lln_deviation(rows, omega, 1);
  // Unit-magnitude entries make every diagonal average exactly one.
  CHECK(dev <= 1e-12);
}

TEST_CASE("operator deviation is positive for proper subsamples") {
  const int n = 16;
  auto rows = scaled_dft_rows(n);
  sb::RngStream rng(53, 1);
  std::vector<int> omega = rng.k_subset(n, 4);
  const double dev = sb::operator_lln_deviation(rows, omega, 2);
  CHECK(dev > 0.0);
  const double full = sb::operator_lln_deviation(rows, iota_vec(n), 2);
  CHECK(full <= 1e-12);
  CHECK(dev > full);
}

TEST_CASE("operator deviation validates its inputs") {
  const int n = 8;
  auto rows = scaled_dft_rows(n);
  std::vector<int> omega = iota_vec(4);

  std::vector<sb::ComplexVector> empty;
  CHECK_THROWS_AS(sb::operator_lln_deviation(empty, omega, 1),
                  sb::ParameterError);

  CHECK_THROWS_AS(sb::operator_lln_deviation(rows, omega, 0),
                  sb::ParameterError);
  CHECK_THROWS_AS(sb::operator_lln_deviation(rows, {}, 1),
                  sb::ParameterError);
  CHECK_THROWS_AS(sb::operator_lln_deviation(rows, {0, 99}, 1),
                  sb::ParameterError);

  auto ragged = rows;
  ragged[3] = sb::ComplexVector::Zero(5);
  CHECK_THROWS_AS(sb::operator_lln_deviation(ragged, omega, 1),
                  sb::DimensionError);

  // Doubling every vector breaks the decomposition-of-identity contract.
  auto doubled = rows;
  for (auto& v : doubled) v *= 2.0;
  CHECK_THROWS_AS(sb::operator_lln_deviation(doubled, omega, 1),
                  sb::ValidationError);

  // 50 choose 5 subsets exceed the enumeration budget.
  std::vector<sb::ComplexVector> big;
  const double root50 = std::sqrt(50.0);
  for (int i = 0; i < 50; ++i) {
    sb::ComplexVector e = sb::ComplexVector::Zero(50);
    e(i) = root50;
    big.push_back(e);
  }
  CHECK_THROWS_AS(sb::operator_lln_deviation(big, iota_vec(10), 5),
                  sb::BudgetError);
}

}  // TEST_SUITE
