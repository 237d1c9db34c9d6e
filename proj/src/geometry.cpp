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

#include "sparsebench/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sparsebench/errors.hpp"

namespace sparsebench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kConeTol = 1e-12;

// Kahan compensated accumulator; keeps 1e5-term means at full precision.
class CompensatedSum {
 public:
  void add(double value) {
    const double y = value - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

void check_rn(int r, int n, const char* op) {
  if (n < 1 || r < 1 || r > n) {
    throw ParameterError(std::string(op) + ": need 1 <= r <= n");
  }
}

}  // namespace

ConeSpec cone_of(const RealVector& f) {
  ConeSpec cone;
  cone.n = static_cast<int>(f.size());
  for (int i = 0; i < cone.n; ++i) {
    if (f(i) > 0.0) {
      cone.t_plus.push_back(i);
    } else if (f(i) < 0.0) {
      cone.t_minus.push_back(i);
    }
  }
  return cone;
}

double cone_functional(const ConeSpec& cone, const RealVector& t) {
  if (t.size() != cone.n) {
    throw DimensionError("cone_functional: dimension mismatch");
  }
  std::vector<char> on_support(static_cast<std::size_t>(cone.n), 0);
  double value = 0.0;
  for (const int i : cone.t_minus) {
    value += t(i);
    on_support[static_cast<std::size_t>(i)] = 1;
  }
  for (const int i : cone.t_plus) {
    value -= t(i);
    on_support[static_cast<std::size_t>(i)] = 1;
  }
  for (int i = 0; i < cone.n; ++i) {
    if (!on_support[static_cast<std::size_t>(i)]) value += std::abs(t(i));
  }
  return value;
}

bool cone_contains(const ConeSpec& cone, const RealVector& t) {
  return cone_functional(cone, t) <= kConeTol;
}

double d_norm(const RealVector& x, int r) {
  const int n = static_cast<int>(x.size());
  check_rn(r, n, "d_norm");
  const SortedAbs sorted = sorted_abs_desc(x);
  double total = 0.0;
  for (int start = 0; start < n; start += r) {
    const int len = std::min(r, n - start);
    double block = 0.0;
    for (int i = 0; i < len; ++i) {
      block += sorted.values(start + i) * sorted.values(start + i);
    }
    total += std::sqrt(block);
  }
  return total;
}

RealVector sample_cone_sphere(const RealVector& f, RngStream& rng) {
  const int n = static_cast<int>(f.size());
  if (n < 1 || f.cwiseAbs().maxCoeff() == 0.0) {
    throw ParameterError("sample_cone_sphere: f must be nonzero");
  }
  const double l1 = f.lpNorm<1>();
  const ConeSpec cone = cone_of(f);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Uniform Dirichlet weights over the 2n extreme points f +- |f|_1 e_i.
    RealVector u = RealVector::Zero(n);
    double total = 0.0;
    std::vector<double> weights(static_cast<std::size_t>(2 * n));
    for (auto& wgt : weights) {
      wgt = -std::log(1.0 - rng.uniform());
      total += wgt;
    }
    for (int i = 0; i < n; ++i) {
      u(i) = (weights[static_cast<std::size_t>(2 * i)] -
              weights[static_cast<std::size_t>(2 * i + 1)]) /
             total;
    }
    RealVector point = f + l1 * u;
    const double norm = point.norm();
    if (norm <= 1e-14) continue;
    point /= norm;
    if (cone_contains(cone, point)) return point;
  }
  throw SamplingError(
      "sample_cone_sphere: rejection failed 1000 times (unexpected)");
}

WidthEstimate gaussian_width_D_mc(int n, int r, long samples,
                                  RngStream& rng) {
  check_rn(r, n, "gaussian_width_D_mc");
  if (samples < 1000) {
    throw ParameterError("gaussian_width_D_mc: need at least 1000 samples");
  }
  std::vector<double> draws(static_cast<std::size_t>(samples));
  std::vector<double> squares(static_cast<std::size_t>(n));
  for (long t = 0; t < samples; ++t) {
    for (int i = 0; i < n; ++i) {
      const double g = rng.normal();
      squares[static_cast<std::size_t>(i)] = g * g;
    }
    std::nth_element(squares.begin(), squares.begin() + (r - 1),
                     squares.end(), std::greater<double>());
    double top = 0.0;
    for (int i = 0; i < r; ++i) top += squares[static_cast<std::size_t>(i)];
    draws[static_cast<std::size_t>(t)] = std::sqrt(top);
  }
  CompensatedSum sum;
  for (const double v : draws) sum.add(v);
  const double mean = sum.value() / static_cast<double>(samples);
  CompensatedSum sq;
  for (const double v : draws) sq.add((v - mean) * (v - mean));
  const double variance =
      sq.value() / static_cast<double>(samples - 1);
  WidthEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(variance / static_cast<double>(samples));
  est.samples = samples;
  est.bound = gaussian_width_D_bound(n, r);
  return est;
}

double gaussian_width_D_bound(int n, int r) {
  check_rn(r, n, "gaussian_width_D_bound");
  return std::sqrt(2.0 * r *
                   (1.5 + std::log(static_cast<double>(n) / r)));
}

double sample_complexity_gaussian(int r, int n) {
  check_rn(r, n, "sample_complexity_gaussian");
  const double c1 = 6.0 + 4.0 * std::sqrt(2.0);
  return c1 * r * (1.5 + std::log(static_cast<double>(n) / r));
}

ProbabilityBound gordon_escape_probability(double k, double w) {
  if (!(k >= 1.0)) {
    throw ParameterError("gordon_escape_probability: need k >= 1");
  }
  const double threshold = k / std::sqrt(k + 1.0);
  const double diff = threshold - w;
  ProbabilityBound out;
  out.vacuous = w >= threshold;
  // Squaring would erase the sign of diff, so the vacuous side is pinned
  // to the trivial lower bound instead of evaluating the formula.
  out.value =
      out.vacuous
          ? 0.0
          : std::clamp(1.0 - 3.5 * std::exp(-diff * diff / 18.0), 0.0, 1.0);
  return out;
}

ProbabilityBound recovery_probability_bound(double k, int r, int n) {
  const double kbound = sample_complexity_gaussian(r, n);
  ProbabilityBound out;
  if (!(k > kbound)) {
    out.value = 0.0;
    out.vacuous = true;
    return out;
  }
  const double diff = std::sqrt(k) - std::sqrt(kbound);
  out.value =
      std::clamp(1.0 - 3.5 * std::exp(-diff * diff / 18.0), 0.0, 1.0);
  return out;
}

ConeKernelReport cone_kernel_intersect_detail(const RealMatrix& phi,
                                              const RealVector& f) {
  const int k = static_cast<int>(phi.rows());
  const int n = static_cast<int>(phi.cols());
  if (f.size() != n) {
    throw DimensionError("cone_kernel_intersect: dimension mismatch");
  }
  {
    Eigen::ColPivHouseholderQR<RealMatrix> qr(phi);
    qr.setThreshold(1e-10);
    if (qr.rank() < k) {
      throw RankError("cone_kernel_intersect: phi is not full row rank");
    }
    if (k == n) {  // trivial kernel
      return {false, std::numeric_limits<double>::quiet_NaN(), false,
              LPStatus::optimal};
    }
  }
  const ConeSpec cone = cone_of(f);
  std::vector<int> support;
  support.reserve(cone.t_plus.size() + cone.t_minus.size());
  support.insert(support.end(), cone.t_plus.begin(), cone.t_plus.end());
  support.insert(support.end(), cone.t_minus.begin(), cone.t_minus.end());
  std::sort(support.begin(), support.end());
  std::vector<char> on_support(static_cast<std::size_t>(n), 0);
  for (const int i : support) on_support[static_cast<std::size_t>(i)] = 1;
  std::vector<int> complement;
  for (int i = 0; i < n; ++i) {
    if (!on_support[static_cast<std::size_t>(i)]) complement.push_back(i);
  }
  const int nt = static_cast<int>(support.size());
  const int nc = static_cast<int>(complement.size());

  // Signed on-support sum: +1 on T-, -1 on T+.
  RealVector sign_row = RealVector::Zero(nt);
  for (int a = 0; a < nt; ++a) {
    sign_row(a) = f(support[a]) < 0.0 ? 1.0 : -1.0;
  }

  ConeKernelReport report;

  // Off-slice touching: nonzero kernel vectors supported on T whose signed
  // sum vanishes; invisible to the slice LP, decided exactly by rank.
  if (nt > 0) {
    RealMatrix stacked(k + 1, nt);
    for (int a = 0; a < nt; ++a) stacked.col(a) = phi.col(support[a]);
    stacked.row(k) = sign_row.transpose();
    if (nt > k + 1) {
      report.degenerate_touch = true;
    } else {
      Eigen::JacobiSVD<RealMatrix> svd(stacked);
      const auto& sigma = svd.singularValues();
      report.degenerate_touch =
          sigma(0) <= 0.0 || sigma(nt - 1) <= 1e-10 * sigma(0);
    }
  }

  // Slice LP: minimize the off-support l1 mass over the kernel cut by
  // (signed on-support sum) = -1; the cone is hit iff that mass is <= 1.
  LinearProgram lp;
  const int num_vars = nt + 2 * nc;
  lp.c = RealVector::Zero(num_vars);
  lp.c.segment(nt, 2 * nc).setOnes();
  lp.A = RealMatrix::Zero(k + 1, num_vars);
  for (int a = 0; a < nt; ++a) lp.A.col(a).head(k) = phi.col(support[a]);
  for (int cidx = 0; cidx < nc; ++cidx) {
    lp.A.col(nt + cidx).head(k) = phi.col(complement[cidx]);
    lp.A.col(nt + nc + cidx).head(k) = -phi.col(complement[cidx]);
  }
  lp.A.row(k).head(nt) = sign_row.transpose();
  lp.b = RealVector::Zero(k + 1);
  lp.b(k) = -1.0;
  lp.lower = RealVector::Zero(num_vars);
  lp.lower.head(nt).setConstant(-kInf);
  lp.upper = RealVector::Constant(num_vars, kInf);

  const LPSolution sol = solve_lp(lp);
  report.lp_status = sol.status;
  if (sol.status == LPStatus::infeasible) {
    // The slice misses the kernel entirely; only touching can remain.
    report.functional_min = std::numeric_limits<double>::quiet_NaN();
    report.intersect = report.degenerate_touch;
    return report;
  }
  if (sol.status != LPStatus::optimal) {
    throw NumericalError("cone_kernel_intersect: slice LP failed (" +
                         lp_status_name(sol.status) + ")");
  }
  report.functional_min = sol.objective - 1.0;
  report.intersect =
      sol.objective <= 1.0 + 1e-9 || report.degenerate_touch;
  return report;
}

bool cone_kernel_intersect(const RealMatrix& phi, const RealVector& f) {
  return cone_kernel_intersect_detail(phi, f).intersect;
}

MaureyResult maurey_approximate(const RealVector& y, int m,
                                const std::vector<RealVector>& x_vectors,
                                RngStream& rng) {
  const int n = static_cast<int>(y.size());
  if (n < 1 || m < 1) {
    throw ParameterError("maurey_approximate: need n >= 1 and m >= 1");
  }
  const double mass = y.lpNorm<1>();
  if (mass > 1.0 + 1e-12) {
    throw ParameterError(
        "maurey_approximate: y must lie in the unit l1 ball");
  }
  for (const auto& x : x_vectors) {
    if (x.size() != n) {
      throw DimensionError("maurey_approximate: x_vectors dimension mismatch");
    }
  }
  MaureyResult result;
  result.z = RealVector::Zero(n);
  for (int j = 0; j < m; ++j) {
    const double u = rng.uniform();
    // Inversion over the |y| masses; the remainder is the zero atom.
    double cum = 0.0;
    for (int i = 0; i < n; ++i) {
      cum += std::abs(y(i));
      if (u < cum) {
        result.z(i) += y(i) > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
  }
  result.z /= static_cast<double>(m);
  double err = 0.0;
  const RealVector diff = y - result.z;
  for (const auto& x : x_vectors) {
    err = std::max(err, std::abs(x.dot(diff)));
  }
  result.error = err;
  return result;
}

}  // namespace sparsebench
