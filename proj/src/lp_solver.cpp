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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <vector>

#include "sparsebench/errors.hpp"
#include "sparsebench/recovery.hpp"

namespace sparsebench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGapTol = 1e-9;
constexpr int kMaxIterations = 200;

// One internal variable: x(orig) accumulates sign * z plus a constant base.
struct ColumnMap {
  int orig;
  double sign;
};

// One eliminated free variable: the saved pivot row fixes its value from the
// surviving columns, and zero reduced cost fixes the pivot row's dual.
struct FreeElim {
  int col;
  int row;
  double pivot;
  RealVector arow;  // pivot row over all original columns, at elimination
  double brow;      // pivot row right-hand side, at elimination
  RealVector acol;  // eliminated column over then-live rows, zero elsewhere
  double cost;      // objective coefficient of the column, at elimination
};

// Internal form: min c'z + offset, A z = b, 0 <= z (<= upper where finite),
// with A full row rank after dependent rows are dropped.
struct InternalLP {
  RealMatrix A;
  RealVector b;
  RealVector c;
  RealVector upper;
  double offset = 0.0;
  std::vector<ColumnMap> cols;
  RealVector base;             // constant part of the original variables
  std::vector<int> kept_rows;  // original indices of the surviving rows
  std::vector<FreeElim> elims;
  int orig_rows = 0;
  bool infeasible = false;
  double feas_tol = 0.0;       // 1e-9 * (1 + max|b_original|)
};

void validate_lp(const LinearProgram& lp) {
  const Eigen::Index n = lp.c.size();
  const Eigen::Index m = lp.b.size();
  if (lp.A.rows() != m || lp.A.cols() != n || lp.lower.size() != n ||
      lp.upper.size() != n) {
    throw DimensionError("solve_lp: inconsistent problem dimensions");
  }
  if (!lp.b.allFinite() || !lp.c.allFinite() || !lp.A.allFinite()) {
    throw ValidationError("solve_lp: c, A, b must be finite");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    const double lo = lp.lower(j);
    const double hi = lp.upper(j);
    if (std::isnan(lo) || std::isnan(hi) || lo == kInf || hi == -kInf) {
      throw ParameterError("solve_lp: malformed bound on variable " +
                           std::to_string(j));
    }
  }
}

InternalLP build_internal(const LinearProgram& lp) {
  const Eigen::Index n = lp.c.size();
  const Eigen::Index m = lp.b.size();
  InternalLP out;
  out.orig_rows = static_cast<int>(m);
  out.base = RealVector::Zero(n);
  out.feas_tol = 1e-9 * (1.0 + (m > 0 ? lp.b.cwiseAbs().maxCoeff() : 0.0));

  // Substitute each free variable out through an equality row.  A split free
  // variable has no finite analytic center, so interior iterates drift along
  // its null ray until the scaling weights overwhelm the normal equations;
  // elimination removes the ray entirely.  The pivot is the largest live
  // coefficient, which keeps every elimination multiplier at most one.
  RealMatrix Aw = lp.A;
  RealVector bw = lp.b;
  RealVector cw = lp.c;
  std::vector<char> row_live(static_cast<std::size_t>(m), 1);
  std::vector<char> col_gone(static_cast<std::size_t>(n), 0);
  const double pivot_floor =
      1e-12 * (1.0 + (m > 0 && n > 0 ? lp.A.cwiseAbs().maxCoeff() : 0.0));
  for (Eigen::Index j = 0; j < n; ++j) {
    if (lp.lower(j) != -kInf || lp.upper(j) != kInf) continue;
    Eigen::Index best = -1;
    double best_abs = pivot_floor;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (row_live[static_cast<std::size_t>(i)] &&
          std::abs(Aw(i, j)) > best_abs) {
        best = i;
        best_abs = std::abs(Aw(i, j));
      }
    }
    if (best < 0) continue;  // no usable pivot: fall back to splitting
    FreeElim e;
    e.col = static_cast<int>(j);
    e.row = static_cast<int>(best);
    e.pivot = Aw(best, j);
    e.arow = Aw.row(best).transpose();
    e.brow = bw(best);
    e.acol = RealVector::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (row_live[static_cast<std::size_t>(i)]) e.acol(i) = Aw(i, j);
    }
    e.cost = cw(j);
    row_live[static_cast<std::size_t>(best)] = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!row_live[static_cast<std::size_t>(i)] || Aw(i, j) == 0.0) continue;
      const double f = Aw(i, j) / e.pivot;
      Aw.row(i) -= f * e.arow.transpose();
      bw(i) -= f * e.brow;
      Aw(i, j) = 0.0;
    }
    if (cw(j) != 0.0) {
      const double f = cw(j) / e.pivot;
      cw -= f * e.arow;
      out.offset += f * e.brow;
      cw(j) = 0.0;
    }
    col_gone[static_cast<std::size_t>(j)] = 1;
    out.elims.push_back(std::move(e));
  }

  std::vector<int> live_rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (row_live[static_cast<std::size_t>(i)]) {
      live_rows.push_back(static_cast<int>(i));
    }
  }
  const Eigen::Index mr = static_cast<Eigen::Index>(live_rows.size());
  RealMatrix Ar(mr, n);
  RealVector b(mr);
  for (Eigen::Index i = 0; i < mr; ++i) {
    const auto r = static_cast<std::size_t>(i);
    Ar.row(i) = Aw.row(live_rows[r]);
    b(i) = bw(live_rows[r]);
  }

  std::vector<ColumnMap> cols;
  std::vector<double> costs;
  std::vector<double> uppers;
  std::vector<Eigen::Index> src_col;  // original column feeding the internal one
  std::vector<double> src_sign;

  for (Eigen::Index j = 0; j < n; ++j) {
    if (col_gone[static_cast<std::size_t>(j)]) continue;
    const double lo = lp.lower(j);
    const double hi = lp.upper(j);
    if (lo > hi) {
      out.infeasible = true;
      return out;
    }
    if (lo == hi) {  // pinned variable: substitute and drop
      out.base(j) = lo;
      if (lo != 0.0) b -= Ar.col(j) * lo;
      out.offset += cw(j) * lo;
      continue;
    }
    const bool lo_fin = lo > -kInf;
    const bool hi_fin = hi < kInf;
    if (lo_fin) {
      out.base(j) = lo;
      if (lo != 0.0) b -= Ar.col(j) * lo;
      out.offset += cw(j) * lo;
      cols.push_back({static_cast<int>(j), 1.0});
      costs.push_back(cw(j));
      uppers.push_back(hi_fin ? hi - lo : kInf);
      src_col.push_back(j);
      src_sign.push_back(1.0);
    } else if (hi_fin) {  // upper bound only: z = hi - x
      out.base(j) = hi;
      if (hi != 0.0) b -= Ar.col(j) * hi;
      out.offset += cw(j) * hi;
      cols.push_back({static_cast<int>(j), -1.0});
      costs.push_back(-cw(j));
      uppers.push_back(kInf);
      src_col.push_back(j);
      src_sign.push_back(-1.0);
    } else {  // free with no usable pivot: split into signed parts
      cols.push_back({static_cast<int>(j), 1.0});
      costs.push_back(cw(j));
      uppers.push_back(kInf);
      src_col.push_back(j);
      src_sign.push_back(1.0);
      cols.push_back({static_cast<int>(j), -1.0});
      costs.push_back(-cw(j));
      uppers.push_back(kInf);
      src_col.push_back(j);
      src_sign.push_back(-1.0);
    }
  }

  const Eigen::Index N = static_cast<Eigen::Index>(cols.size());
  RealMatrix A(mr, N);
  for (Eigen::Index p = 0; p < N; ++p) {
    A.col(p) = src_sign[static_cast<std::size_t>(p)] *
               Ar.col(src_col[static_cast<std::size_t>(p)]);
  }
  out.cols = std::move(cols);
  out.c = Eigen::Map<RealVector>(costs.data(), N);
  out.upper = Eigen::Map<RealVector>(uppers.data(), N);

  // Row presolve: drop dependent rows, verifying they stay consistent.
  out.kept_rows.assign(live_rows.begin(), live_rows.end());
  if (mr > 0 && N > 0) {
    Eigen::ColPivHouseholderQR<RealMatrix> qr(A.transpose());
    qr.setThreshold(1e-10);
    const Eigen::Index rank = qr.rank();
    if (rank < mr) {
      const auto& perm = qr.colsPermutation().indices();
      std::vector<int> kept(perm.data(), perm.data() + rank);
      std::sort(kept.begin(), kept.end());
      RealMatrix A_kept(rank, N);
      RealVector b_kept(rank);
      for (Eigen::Index i = 0; i < rank; ++i) {
        A_kept.row(i) = A.row(kept[i]);
        b_kept(i) = b(kept[i]);
      }
      const RealVector probe =
          Eigen::ColPivHouseholderQR<RealMatrix>(A_kept).solve(b_kept);
      const double defect = (A * probe - b).cwiseAbs().maxCoeff();
      if (defect > 1e3 * out.feas_tol) {
        out.infeasible = true;
        return out;
      }
      std::vector<int> kept_orig;
      kept_orig.reserve(kept.size());
      for (int idx : kept) {
        kept_orig.push_back(live_rows[static_cast<std::size_t>(idx)]);
      }
      out.kept_rows = std::move(kept_orig);
      A = A_kept;
      b = b_kept;
    }
  } else if (mr > 0 && N == 0) {
    if (b.cwiseAbs().maxCoeff() > 1e3 * out.feas_tol) out.infeasible = true;
    out.kept_rows.clear();
    A.resize(0, 0);
    b.resize(0);
  }
  out.A = std::move(A);
  out.b = std::move(b);
  return out;
}

// Box-separable minimization used when every equality row was dropped.
LPSolution solve_coordinatewise(const InternalLP& in) {
  LPSolution sol;
  sol.dual = RealVector::Zero(in.orig_rows);
  RealVector z = RealVector::Zero(in.c.size());
  for (Eigen::Index j = 0; j < in.c.size(); ++j) {
    if (in.c(j) < 0.0) {
      if (in.upper(j) == kInf) {
        sol.status = LPStatus::unbounded;
        return sol;
      }
      z(j) = in.upper(j);
    }
  }
  RealVector x = in.base;
  for (std::size_t p = 0; p < in.cols.size(); ++p) {
    x(in.cols[p].orig) += in.cols[p].sign * z(static_cast<Eigen::Index>(p));
  }
  sol.primal = std::move(x);
  sol.objective = in.c.dot(z) + in.offset;
  sol.duality_gap = 0.0;
  sol.status = LPStatus::optimal;
  return sol;
}

struct StepScan {
  double alpha = kInf;
};

void limit_step(const RealVector& value, const RealVector& direction,
                StepScan* scan) {
  for (Eigen::Index j = 0; j < value.size(); ++j) {
    if (direction(j) < 0.0) {
      scan->alpha = std::min(scan->alpha, -value(j) / direction(j));
    }
  }
}

LPSolution run_ipm(const InternalLP& in) {
  const Eigen::Index m = in.A.rows();
  const Eigen::Index N = in.A.cols();
  std::vector<Eigen::Index> boxed;
  for (Eigen::Index j = 0; j < N; ++j) {
    if (in.upper(j) < kInf) boxed.push_back(j);
  }
  const double comp_count = static_cast<double>(N + boxed.size());
  const double tol_p = in.feas_tol;
  const double tol_d = 1e-9 * (1.0 + in.c.cwiseAbs().maxCoeff());

  LPSolution sol;
  sol.dual = RealVector::Zero(in.orig_rows);

  const RealMatrix At = in.A.transpose();
  auto regularize = [](RealMatrix* M) {
    const double delta = 1e-12 * std::max(1.0, M->diagonal().maxCoeff());
    M->diagonal().array() += delta;
  };

  // Starting point: least-squares primal/dual pair shifted into the
  // positive orthant, box slacks floored away from zero.
  RealMatrix AAt = in.A * At;
  regularize(&AAt);
  Eigen::LDLT<RealMatrix> start_fact(AAt);
  if (start_fact.info() != Eigen::Success) {
    sol.status = LPStatus::numerical_failure;
    return sol;
  }
  RealVector z = At * start_fact.solve(in.b);
  RealVector y = start_fact.solve(in.A * in.c);
  RealVector s = in.c - At * y;
  const double shift_z = std::max(-1.5 * z.minCoeff(), 0.0);
  const double shift_s = std::max(-1.5 * s.minCoeff(), 0.0);
  z.array() += shift_z;
  s.array() += shift_s;
  const double cross = std::max(z.dot(s), 1e-8);
  z.array() += 0.5 * cross / std::max(s.sum(), 1e-8);
  s.array() += 0.5 * cross / std::max(z.sum(), 1e-8);
  z = z.cwiseMax(1e-8);
  s = s.cwiseMax(1e-8);

  RealVector w(boxed.size()), v(boxed.size());
  double mu = z.dot(s);
  for (std::size_t p = 0; p < boxed.size(); ++p) {
    const Eigen::Index j = boxed[p];
    w(p) = std::max(in.upper(j) - z(j), 0.25 * in.upper(j));
  }
  mu /= std::max(comp_count, 1.0);
  for (std::size_t p = 0; p < boxed.size(); ++p) {
    v(p) = std::max(mu / w(p), 1e-2);
  }

  RealVector rp(m), rd(N), ru(boxed.size()), rv_box(boxed.size());
  RealVector d(N), rhat(N), rzs(N), rwv(boxed.size());
  RealVector dy(m), dz(N), ds(N), dw(boxed.size()), dv(boxed.size());
  int stalled = 0;

  for (int iter = 0; iter <= kMaxIterations; ++iter) {
    rp = in.b - in.A * z;
    rd = in.c - At * y - s;
    for (std::size_t p = 0; p < boxed.size(); ++p) {
      const Eigen::Index j = boxed[p];
      rd(j) += v(p);
      ru(p) = in.upper(j) - z(j) - w(p);
    }
    double comp = z.dot(s);
    for (std::size_t p = 0; p < boxed.size(); ++p) comp += w(p) * v(p);
    mu = comp / std::max(comp_count, 1.0);

    double dual_box = 0.0;
    for (std::size_t p = 0; p < boxed.size(); ++p) {
      dual_box += in.upper(boxed[p]) * v(p);
    }
    const double pobj = in.c.dot(z) + in.offset;
    const double dobj = in.b.dot(y) - dual_box + in.offset;
    sol.trace.emplace_back(pobj, dobj);
    sol.iterations = iter;

    const double pinf = std::max(
        m > 0 ? rp.cwiseAbs().maxCoeff() : 0.0,
        boxed.empty() ? 0.0 : ru.cwiseAbs().maxCoeff());
    const double dinf = rd.cwiseAbs().maxCoeff();
    const double relgap =
        std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));

    if (relgap <= kGapTol && pinf <= tol_p && dinf <= tol_d) {
      sol.status = LPStatus::optimal;
      sol.objective = pobj;
      sol.duality_gap = std::abs(pobj - dobj);
      break;
    }
    // Divergence along a ray keeps the residual small only relative to the
    // exploding iterate scale, so the feasibility gates are scale-relative.
    const double z_scale = z.size() > 0 ? z.cwiseAbs().maxCoeff() : 0.0;
    const double y_scale = (y.size() > 0 ? y.cwiseAbs().maxCoeff() : 0.0) +
                           (v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0);
    if (pobj < -1e13 * (1.0 + std::abs(in.offset)) &&
        pinf <= std::max(1e3 * tol_p, 1e-8 * (1.0 + z_scale))) {
      sol.status = LPStatus::unbounded;
      return sol;
    }
    if (dobj > 1e13 * (1.0 + std::abs(in.offset)) &&
        dinf <= std::max(1e3 * tol_d, 1e-8 * (1.0 + y_scale))) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
    // A near-optimal stall is a numerical failure, never an infeasibility
    // verdict: infeasible certificates come with a large residual gap.
    if (mu < 1e-12 && pinf > 1e3 * tol_p && relgap > 1e-4) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
    if (!z.allFinite() || !s.allFinite() || z.cwiseAbs().maxCoeff() > 1e14) {
      sol.status = LPStatus::numerical_failure;
      return sol;
    }
    if (iter == kMaxIterations) {
      sol.status = LPStatus::numerical_failure;
      return sol;
    }

    for (Eigen::Index j = 0; j < N; ++j) d(j) = s(j) / z(j);
    for (std::size_t p = 0; p < boxed.size(); ++p) {
      d(boxed[p]) += v(p) / w(p);
    }
    d = d.cwiseInverse();

    const RealMatrix normal_true = in.A * d.asDiagonal() * At;
    RealMatrix normal = normal_true;
    regularize(&normal);
    Eigen::LDLT<RealMatrix> fact(normal);
    if (fact.info() != Eigen::Success) {
      sol.status = LPStatus::numerical_failure;
      return sol;
    }

    auto solve_direction = [&]() -> bool {
      rhat = rd;
      for (Eigen::Index j = 0; j < N; ++j) rhat(j) -= rzs(j) / z(j);
      for (std::size_t p = 0; p < boxed.size(); ++p) {
        const Eigen::Index j = boxed[p];
        rhat(j) += (rwv(p) - v(p) * ru(p)) / w(p);
      }
      const RealVector nrhs = rp + in.A * (d.cwiseProduct(rhat));
      dy = fact.solve(nrhs);
      // One refinement pass against the unregularized matrix removes most
      // of the regularization and factorization error near convergence.
      dy += fact.solve(nrhs - normal_true * dy);
      dz = d.cwiseProduct(At * dy - rhat);
      for (Eigen::Index j = 0; j < N; ++j) {
        ds(j) = (rzs(j) - s(j) * dz(j)) / z(j);
      }
      for (std::size_t p = 0; p < boxed.size(); ++p) {
        const Eigen::Index j = boxed[p];
        dw(p) = ru(p) - dz(j);
        dv(p) = (rwv(p) - v(p) * dw(p)) / w(p);
      }
      return dy.allFinite() && dz.allFinite() && ds.allFinite() &&
             (boxed.empty() || (dw.allFinite() && dv.allFinite()));
    };

    // Predictor: pure Newton step toward complementarity zero.
    rzs = -z.cwiseProduct(s);
    for (std::size_t p = 0; p < boxed.size(); ++p) rwv(p) = -w(p) * v(p);
    if (!solve_direction()) {
      sol.status = LPStatus::numerical_failure;
      return sol;
    }
    StepScan aff_p, aff_d;
    limit_step(z, dz, &aff_p);
    limit_step(w, dw, &aff_p);
    limit_step(s, ds, &aff_d);
    limit_step(v, dv, &aff_d);
    const double alpha_aff_p = std::min(1.0, aff_p.alpha);
    const double alpha_aff_d = std::min(1.0, aff_d.alpha);
    double mu_aff = (z + alpha_aff_p * dz).dot(s + alpha_aff_d * ds);
    for (std::size_t p = 0; p < boxed.size(); ++p) {
      mu_aff += (w(p) + alpha_aff_p * dw(p)) * (v(p) + alpha_aff_d * dv(p));
    }
    mu_aff /= std::max(comp_count, 1.0);
    const double ratio = std::clamp(mu_aff / std::max(mu, 1e-300), 0.0, 1.0);
    const double sigma = ratio * ratio * ratio;

    // Corrector: recenter and cancel the second-order predictor error.
    const RealVector dz_aff = dz, ds_aff = ds;
    const RealVector dw_aff = dw, dv_aff = dv;
    rzs = ((sigma * mu) - z.cwiseProduct(s).array() -
           dz_aff.cwiseProduct(ds_aff).array())
              .matrix();
    for (std::size_t p = 0; p < boxed.size(); ++p) {
      rwv(p) = sigma * mu - w(p) * v(p) - dw_aff(p) * dv_aff(p);
    }
    if (!solve_direction()) {
      sol.status = LPStatus::numerical_failure;
      return sol;
    }
    StepScan lim_p, lim_d;
    limit_step(z, dz, &lim_p);
    limit_step(w, dw, &lim_p);
    limit_step(s, ds, &lim_d);
    limit_step(v, dv, &lim_d);
    const double eta = mu < 1e-6 ? 0.99995 : 0.9995;
    const double alpha_p = std::min(1.0, eta * lim_p.alpha);
    const double alpha_d = std::min(1.0, eta * lim_d.alpha);
    if (alpha_p < 1e-9 && alpha_d < 1e-9) {
      if (++stalled >= 3) {
        sol.status = (pinf > 1e3 * tol_p && relgap > 1e-4)
                         ? LPStatus::infeasible
                         : LPStatus::numerical_failure;
        return sol;
      }
    } else {
      stalled = 0;
    }
    z += alpha_p * dz;
    y += alpha_d * dy;
    s += alpha_d * ds;
    for (std::size_t p = 0; p < boxed.size(); ++p) {
      w(p) += alpha_p * dw(p);
      v(p) += alpha_d * dv(p);
    }
  }

  if (sol.status != LPStatus::optimal) {
    sol.status = LPStatus::numerical_failure;
    return sol;
  }
  RealVector x = in.base;
  for (std::size_t p = 0; p < in.cols.size(); ++p) {
    x(in.cols[p].orig) += in.cols[p].sign * z(static_cast<Eigen::Index>(p));
  }
  sol.primal = std::move(x);
  for (std::size_t i = 0; i < in.kept_rows.size(); ++i) {
    sol.dual(in.kept_rows[i]) = y(static_cast<Eigen::Index>(i));
  }
  return sol;
}

}  // namespace

LPSolution solve_lp(const LinearProgram& lp) {
  validate_lp(lp);
  InternalLP internal = build_internal(lp);
  if (internal.infeasible) {
    LPSolution sol;
    sol.status = LPStatus::infeasible;
    sol.dual = RealVector::Zero(lp.b.size());
    return sol;
  }
  LPSolution sol;
  if (internal.A.rows() == 0) {
    sol = solve_coordinatewise(internal);
  } else {
    sol = run_ipm(internal);
  }
  if (sol.status == LPStatus::optimal) {
    // Undo the eliminations in reverse: each saved pivot row fixes its
    // variable from values recovered later, and zero reduced cost on the
    // eliminated column fixes the pivot row's dual.
    for (auto it = internal.elims.rbegin(); it != internal.elims.rend();
         ++it) {
      sol.primal(it->col) = (it->brow - it->arow.dot(sol.primal)) / it->pivot;
      sol.dual(it->row) = (it->cost - it->acol.dot(sol.dual)) / it->pivot;
    }
    // Re-verify the certified invariants in the original variable space.
    const double feas =
        lp.b.size() > 0 ? (lp.A * sol.primal - lp.b).cwiseAbs().maxCoeff()
                        : 0.0;
    const double bscale =
        lp.b.size() > 0 ? lp.b.cwiseAbs().maxCoeff() : 0.0;
    if (feas > 1e-9 * (1.0 + bscale) || !sol.primal.allFinite()) {
      sol.status = LPStatus::numerical_failure;
    } else {
      sol.objective = lp.c.dot(sol.primal);
    }
  }
  return sol;
}

std::string lp_status_name(LPStatus status) {
  switch (status) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    case LPStatus::numerical_failure: return "numerical-failure";
  }
  return "unknown";
}

void write_lp_file(const std::string& path, const LinearProgram& lp) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  auto bound_token = [](double value) -> std::string {
    if (value == kInf) return "inf";
    if (value == -kInf) return "-inf";
    return format_double(value);
  };
  out << "c\n";
  for (Eigen::Index j = 0; j < lp.c.size(); ++j) {
    out << (j > 0 ? " " : "") << format_double(lp.c(j));
  }
  out << "\nA\n";
  for (Eigen::Index i = 0; i < lp.A.rows(); ++i) {
    for (Eigen::Index j = 0; j < lp.A.cols(); ++j) {
      out << (j > 0 ? " " : "") << format_double(lp.A(i, j));
    }
    out << '\n';
  }
  out << "b\n";
  for (Eigen::Index i = 0; i < lp.b.size(); ++i) {
    out << (i > 0 ? " " : "") << format_double(lp.b(i));
  }
  out << "\nbounds\n";
  for (Eigen::Index j = 0; j < lp.c.size(); ++j) {
    out << bound_token(lp.lower(j)) << ' ' << bound_token(lp.upper(j))
        << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace sparsebench
