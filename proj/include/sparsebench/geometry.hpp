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

#ifndef SPARSEBENCH_GEOMETRY_HPP_
#define SPARSEBENCH_GEOMETRY_HPP_

#include <vector>

#include "sparsebench/numerics.hpp"
#include "sparsebench/recovery.hpp"

namespace sparsebench {

// Sign pattern of a reference signal: T+ holds its positive coordinates,
// T- the negative ones; everything else is the off-support complement.
struct ConeSpec {
  std::vector<int> t_plus;
  std::vector<int> t_minus;
  int n = 0;
};

ConeSpec cone_of(const RealVector& f);

// Value of sum_{T-} t - sum_{T+} t + sum_{complement} |t|; the descent cone
// at f is exactly where this is <= 0.
double cone_functional(const ConeSpec& cone, const RealVector& t);

// true iff the cone functional is <= 1e-12.
bool cone_contains(const ConeSpec& cone, const RealVector& t);

// Blockwise l2 sums over the non-increasing magnitude rearrangement,
// blocks of size r (last block possibly shorter).
double d_norm(const RealVector& x, int r);

// A point of the descent cone on the unit sphere: a uniform convex
// combination of the extreme points f +- |f|_1 e_i of the shifted
// cross-polytope, normalized, and rejection-checked against the cone.
RealVector sample_cone_sphere(const RealVector& f, RngStream& rng);

struct WidthEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
  double bound = 0.0;  // analytic companion value
};

// Monte-Carlo mean of the top-r Euclidean mass of a standard Gaussian:
// per sample sqrt of the sum of the r largest g(i)^2.  samples >= 1000.
WidthEstimate gaussian_width_D_mc(int n, int r, long samples, RngStream& rng);

// sqrt(2 r (1.5 + ln(n/r))), natural logarithm.
double gaussian_width_D_bound(int n, int r);

// (6 + 4 sqrt(2)) * r * (1.5 + ln(n/r)).
double sample_complexity_gaussian(int r, int n);

struct ProbabilityBound {
  double value = 0.0;
  bool vacuous = false;
};

// 1 - 3.5 exp(-(k/sqrt(k+1) - w)^2 / 18), clamped to [0, 1]; vacuous when
// w >= k/sqrt(k+1).
ProbabilityBound gordon_escape_probability(double k, double w);

// 1 - 3.5 exp(-(sqrt(k) - sqrt(kbound))^2 / 18) with kbound from
// sample_complexity_gaussian; returns 0 and vacuous when k <= kbound.
ProbabilityBound recovery_probability_bound(double k, int r, int n);

struct ConeKernelReport {
  bool intersect = false;
  // Minimum of the cone functional over the kernel slice where the signed
  // on-support sum is -1; NaN when that slice misses the kernel.
  double functional_min = 0.0;
  // Nonzero kernel vectors supported on T with signed sum 0 exist (the
  // slice-invisible touching case), decided by a rank test.
  bool degenerate_touch = false;
  LPStatus lp_status = LPStatus::optimal;
};

// Whether the kernel of phi meets the descent cone at f outside the origin.
ConeKernelReport cone_kernel_intersect_detail(const RealMatrix& phi,
                                              const RealVector& f);
bool cone_kernel_intersect(const RealMatrix& phi, const RealVector& f);

struct MaureyResult {
  RealVector z;
  double error = 0.0;  // max_i |<x_i, y - z>|
};

// Empirical m-term approximation of y in the l1 ball: average of m draws
// of the random signed coordinate vector whose mean is y (a zero atom
// fills in when |y|_1 < 1), with the error measured against x_vectors.
MaureyResult maurey_approximate(const RealVector& y, int m,
                                const std::vector<RealVector>& x_vectors,
                                RngStream& rng);

}  // namespace sparsebench

#endif  // SPARSEBENCH_GEOMETRY_HPP_
