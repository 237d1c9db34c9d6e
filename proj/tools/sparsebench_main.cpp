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

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "sparsebench/ensembles.hpp"
#include "sparsebench/errors.hpp"
#include "sparsebench/geometry.hpp"
#include "sparsebench/harness.hpp"
#include "sparsebench/numerics.hpp"
#include "sparsebench/recovery.hpp"
#include "sparsebench/ric.hpp"

namespace sb = sparsebench;

namespace {

sb::EnsembleKind parse_ensemble(const std::string& name) {
  if (name == "gaussian") return sb::EnsembleKind::gaussian;
  if (name == "fourier") return sb::EnsembleKind::partial_fourier;
  return sb::EnsembleKind::bounded_orthogonal;
}

sb::AmplitudeModel parse_amplitude(const std::string& name) {
  return name == "gaussian" ? sb::AmplitudeModel::gaussian
                            : sb::AmplitudeModel::rademacher;
}

// Loads a bounded-orthogonal source matrix, rejecting non-orthogonal input.
// K = sqrt(n) max |U_ij| must be O(1) for row sampling to be informative;
// beyond 10 the tool warns and proceeds.
sb::AnyMatrix load_orthogonal(const std::string& path) {
  sb::AnyMatrix u = sb::read_matrix_file(path);
  const double flatness =
      std::visit([](const auto& m) { return sb::validate_orthogonal(m); }, u);
  if (flatness > 10.0) {
    std::cerr << "warning: source matrix has K = "
              << sb::format_double(flatness)
              << " > 10; row sampling concentrates poorly on spiky bases\n";
  }
  return u;
}

void warn_small_k(int k, int r) {
  if (k < 2 * r) {
    std::cerr << "warning: k < 2r; no method can identify r-sparse signals "
                 "from fewer than 2r measurements, proceeding\n";
  }
}

std::uint64_t u64(int value) { return static_cast<std::uint64_t>(value); }

struct PhaseArgs {
  std::string ensemble = "gaussian";
  std::string amp = "rademacher";
  std::vector<int> n_list;
  std::vector<int> r_list;
  int k_min = 1;
  int k_max = 1;
  int k_step = 1;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string matrix_file;
  std::string out;
  std::string svg;
  std::string kstar;
};

int run_phase(const PhaseArgs& a) {
  sb::PhaseGrid grid;
  grid.ensemble = parse_ensemble(a.ensemble);
  grid.amplitude = parse_amplitude(a.amp);
  grid.n_list = a.n_list;
  grid.r_list = a.r_list;
  grid.k_min = a.k_min;
  grid.k_max = a.k_max;
  grid.k_step = a.k_step;
  grid.trials = a.trials;
  grid.seed = a.seed;
  if (grid.ensemble == sb::EnsembleKind::bounded_orthogonal) {
    if (a.matrix_file.empty()) {
      throw sb::ParameterError("phase: --ensemble ortho needs --matrix-file");
    }
    grid.ortho_u = load_orthogonal(a.matrix_file);
  } else if (!a.matrix_file.empty()) {
    throw sb::ParameterError(
        "phase: --matrix-file applies only to --ensemble ortho");
  }

  const sb::PhaseTable table = sb::run_phase_transition(grid);
  sb::export_csv(table, a.out);
  if (!a.svg.empty()) sb::export_svg(table, a.svg);
  if (!a.kstar.empty()) sb::export_csv(sb::empirical_k_star(table), a.kstar);
  if (sb::solver_failure_budget_exceeded(table)) {
    std::cerr << "error: solver failures exceed 10% of trials in at least "
                 "one grid cell; results written but not trustworthy\n";
    return 2;
  }
  return 0;
}

struct RecoverArgs {
  std::string ensemble = "gaussian";
  std::string amp = "rademacher";
  int n = 0;
  int r = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::string matrix_file;
  std::string dump_lp;
};

int run_recover(const RecoverArgs& a) {
  warn_small_k(a.k, a.r);
  sb::RngStream matrix_rng(
      a.seed, sb::derive_stream_id("recover/matrix",
                                   {u64(a.n), u64(a.r), u64(a.k)}));
  sb::RngStream signal_rng(
      a.seed, sb::derive_stream_id("recover/signal",
                                   {u64(a.n), u64(a.r), u64(a.k)}));
  const sb::Signal f = sb::sample_sparse_signal(
      {a.n, a.r, parse_amplitude(a.amp)}, signal_rng);

  sb::RealMatrix phi;
  switch (parse_ensemble(a.ensemble)) {
    case sb::EnsembleKind::gaussian:
      if (!a.matrix_file.empty()) {
        throw sb::ParameterError(
            "recover: --matrix-file applies only to --ensemble ortho");
      }
      phi = sb::sample_gaussian(a.k, a.n, matrix_rng);
      break;
    case sb::EnsembleKind::partial_fourier:
      if (!a.matrix_file.empty()) {
        throw sb::ParameterError(
            "recover: --matrix-file applies only to --ensemble ortho");
      }
      phi = sb::realify(sb::sample_partial_fourier(a.k, a.n, matrix_rng)
                            .matrix);
      break;
    case sb::EnsembleKind::bounded_orthogonal: {
      if (a.matrix_file.empty()) {
        throw sb::ParameterError(
            "recover: --ensemble ortho needs --matrix-file");
      }
      sb::AnyMatrix u = load_orthogonal(a.matrix_file);
      const auto dim = std::holds_alternative<sb::RealMatrix>(u)
                           ? std::get<sb::RealMatrix>(u).rows()
                           : std::get<sb::ComplexMatrix>(u).rows();
      if (dim != a.n) {
        throw sb::ParameterError(
            "recover: --n must match the source matrix dimension " +
            std::to_string(dim));
      }
      if (std::holds_alternative<sb::RealMatrix>(u)) {
        phi = sb::sample_rows(std::get<sb::RealMatrix>(u), a.k, matrix_rng)
                  .matrix;
      } else {
        phi = sb::realify(
            sb::sample_rows(std::get<sb::ComplexMatrix>(u), a.k, matrix_rng)
                .matrix);
      }
      break;
    }
  }
  const sb::RealVector y = phi * f.values;

  if (!a.dump_lp.empty()) {
    sb::write_lp_file(a.dump_lp, sb::make_basis_pursuit_lp(phi, y));
  }

  sb::BPResult bp;
  try {
    bp = sb::basis_pursuit(phi, y);
  } catch (const sb::InfeasibleError&) {
    std::cout << "verdict: failed\n";
    std::cout << "solver_status: infeasible\n";
    return 2;
  }
  if (bp.status != sb::LPStatus::optimal) {
    std::cout << "verdict: failed\n";
    std::cout << "solver_status: " << sb::lp_status_name(bp.status) << "\n";
    return 2;
  }

  const double peak = bp.f.cwiseAbs().maxCoeff();
  std::cout << "support:";
  for (int i = 0; i < bp.f.size(); ++i) {
    if (std::abs(bp.f(i)) > 1e-6 * std::max(1.0, peak)) {
      std::cout << " " << i;
    }
  }
  std::cout << "\n";
  std::cout << "l2_error: " << sb::format_double((bp.f - f.values).norm())
            << "\n";
  std::cout << "l1_objective: " << sb::format_double(bp.objective) << "\n";
  const sb::RecoveryVerdict verdict = sb::verify_recovery(f, bp);
  std::cout << "verdict: "
            << (verdict == sb::RecoveryVerdict::exact ? "exact" : "failed")
            << "\n";
  return 0;
}

struct RicArgs {
  std::string matrix_file;
  int r = 0;
  bool exact = false;
  long sampled = -1;
  std::uint64_t seed = 0;
};

int run_ric(const RicArgs& a) {
  const sb::AnyMatrix m = sb::read_matrix_file(a.matrix_file);
  sb::RicReport report;
  if (a.sampled >= 0) {
    sb::RngStream rng(a.seed,
                      sb::derive_stream_id("ric/sampled", u64(a.r)));
    report = std::visit(
        [&](const auto& mat) {
          return sb::restricted_isometry_constant_sampled(mat, a.r, a.sampled,
                                                          rng);
        },
        m);
  } else {
    report = std::visit(
        [&](const auto& mat) {
          return sb::restricted_isometry_constant(mat, a.r);
        },
        m);
  }

  // The last four fields carry the sufficient-condition inputs and verdict;
  // they stay empty when the 3r/4r enumeration is out of reach.
  std::string d3;
  std::string d4;
  std::string shared_c;
  std::string verdict;
  try {
    const sb::CtReport ct = std::visit(
        [&](const auto& mat) { return sb::ric_condition_holds(mat, a.r); },
        m);
    d3 = sb::format_double(ct.delta_3r);
    d4 = sb::format_double(ct.delta_4r);
    shared_c = sb::format_double(ct.shared_c);
    verdict = ct.verdict ? "true" : "false";
  } catch (const sb::Error&) {
  }

  std::cout << report.r << ","
            << (report.mode == sb::RicMode::exact ? "exact" : "sampled")
            << "," << sb::format_double(report.lambda_min_global) << ","
            << sb::format_double(report.lambda_max_global) << ","
            << sb::format_double(report.c_opt) << ","
            << sb::format_double(report.delta) << "," << d3 << "," << d4
            << "," << shared_c << "," << verdict << "\n";
  return 0;
}

struct WidthArgs {
  int n = 0;
  int r = 0;
  long samples = 0;
  std::uint64_t seed = 0;
};

int run_width(const WidthArgs& a) {
  sb::RngStream rng(a.seed,
                    sb::derive_stream_id("width", {u64(a.n), u64(a.r)}));
  const sb::WidthEstimate est =
      sb::gaussian_width_D_mc(a.n, a.r, a.samples, rng);
  std::cout << "n,r,samples,mean,std_error,bound\n";
  std::cout << a.n << "," << a.r << "," << est.samples << ","
            << sb::format_double(est.mean) << ","
            << sb::format_double(est.std_error) << ","
            << sb::format_double(est.bound) << "\n";
  return 0;
}

struct EscapeArgs {
  double k = -1.0;
  double w = -1.0;
  int r = 0;
  int n = 0;
  bool has_k = false;
  bool has_w = false;
  bool has_r = false;
  bool has_n = false;
};

int run_escape(const EscapeArgs& a) {
  if (a.has_w) {
    if (!a.has_k || a.has_r || a.has_n) {
      throw sb::ParameterError("escape: --w pairs with --k only");
    }
    const sb::ProbabilityBound b = sb::gordon_escape_probability(a.k, a.w);
    std::cout << "k,w,probability,vacuous\n";
    std::cout << sb::format_double(a.k) << "," << sb::format_double(a.w)
              << "," << sb::format_double(b.value) << ","
              << (b.vacuous ? "true" : "false") << "\n";
    return 0;
  }
  if (a.has_r && a.has_n) {
    if (a.has_k) {
      const sb::ProbabilityBound b =
          sb::recovery_probability_bound(a.k, a.r, a.n);
      std::cout << "k,r,n,probability,vacuous\n";
      std::cout << sb::format_double(a.k) << "," << a.r << "," << a.n << ","
                << sb::format_double(b.value) << ","
                << (b.vacuous ? "true" : "false") << "\n";
      return 0;
    }
    std::cout << "r,n,k_bound\n";
    std::cout << a.r << "," << a.n << ","
              << sb::format_double(sb::sample_complexity_gaussian(a.r, a.n))
              << "\n";
    return 0;
  }
  throw sb::ParameterError(
      "escape: pass --k and --w, or --r and --n (add --k for the success "
      "probability at k measurements)");
}

struct ConeCheckArgs {
  int n = 0;
  int r = 0;
  int k = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

int run_cone_check(const ConeCheckArgs& a) {
  if (a.trials < 1) {
    throw sb::ParameterError("cone-check: need at least one trial");
  }
  int intersects = 0;
  int degenerate = 0;
  for (int t = 0; t < a.trials; ++t) {
    sb::RngStream matrix_rng(
        a.seed, sb::derive_stream_id(
                    "cone/matrix", {u64(a.n), u64(a.r), u64(a.k), u64(t)}));
    sb::RngStream signal_rng(
        a.seed, sb::derive_stream_id(
                    "cone/signal", {u64(a.n), u64(a.r), u64(a.k), u64(t)}));
    const sb::Signal f = sb::sample_sparse_signal(
        {a.n, a.r, sb::AmplitudeModel::rademacher}, signal_rng);
    const sb::RealMatrix phi = sb::sample_gaussian(a.k, a.n, matrix_rng);
    const sb::ConeKernelReport report =
        sb::cone_kernel_intersect_detail(phi, f.values);
    if (report.intersect) ++intersects;
    if (report.degenerate_touch) ++degenerate;
  }
  const int misses = a.trials - intersects;
  std::cout << "n,r,k,trials,intersects,misses,degenerate_touches,miss_rate\n";
  std::cout << a.n << "," << a.r << "," << a.k << "," << a.trials << ","
            << intersects << "," << misses << "," << degenerate << ","
            << sb::format_double(static_cast<double>(misses) / a.trials)
            << "\n";
  return 0;
}

struct MaureyArgs {
  int n = 0;
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Real and imaginary parts of the unit-modulus transform rows; every vector
// has sup-norm at most 1, the boundedness the error norm relies on.
std::vector<sb::RealVector> transform_x_vectors(int n) {
  const sb::ComplexMatrix psi = sb::dft_matrix(n);
  const double scale = std::sqrt(static_cast<double>(n));
  std::vector<sb::RealVector> xs;
  xs.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const sb::ComplexVector row = scale * psi.row(i).transpose();
    xs.emplace_back(row.real());
    xs.emplace_back(row.imag());
  }
  return xs;
}

int run_maurey(const MaureyArgs& a) {
  if (a.trials < 1) {
    throw sb::ParameterError("maurey: need at least one trial");
  }
  const std::vector<sb::RealVector> xs = transform_x_vectors(a.n);
  const sb::RealVector y =
      sb::RealVector::Constant(a.n, 1.0 / static_cast<double>(a.n));
  sb::RngStream rng(a.seed,
                    sb::derive_stream_id("maurey", {u64(a.n), u64(a.m)}));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < a.trials; ++t) {
    const double err = sb::maurey_approximate(y, a.m, xs, rng).error;
    sum += err;
    sum_sq += err * err;
  }
  const double mean = sum / a.trials;
  const double var =
      a.trials > 1 ? std::max(0.0, (sum_sq - a.trials * mean * mean) /
                                       (a.trials - 1))
                   : 0.0;
  const double std_error = std::sqrt(var / a.trials);
  std::cout << "n,m,trials,mean_error,std_error\n";
  std::cout << a.n << "," << a.m << "," << a.trials << ","
            << sb::format_double(mean) << "," << sb::format_double(std_error)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sparsebench: l1 sparse recovery, restricted-isometry diagnostics, "
      "and convex-geometry estimators"};
  app.require_subcommand(1);
  int rc = 0;

  const std::vector<std::string> ensembles = {"gaussian", "fourier", "ortho"};
  const std::vector<std::string> amplitudes = {"rademacher", "gaussian"};

  PhaseArgs pa;
  auto* phase = app.add_subcommand(
      "phase", "Success-rate grid over (ensemble, n, r, k), exported as CSV");
  phase->add_option("--ensemble", pa.ensemble, "Measurement ensemble")
      ->check(CLI::IsMember(ensembles));
  phase->add_option("--amp", pa.amp, "Nonzero amplitude model")
      ->check(CLI::IsMember(amplitudes));
  phase->add_option("--n", pa.n_list, "Signal dimension (repeatable)")
      ->required();
  phase->add_option("--r", pa.r_list, "Sparsity (repeatable)")->required();
  phase->add_option("--k-min", pa.k_min, "Smallest measurement count")
      ->required();
  phase->add_option("--k-max", pa.k_max, "Largest measurement count")
      ->required();
  phase->add_option("--k-step", pa.k_step, "Measurement count increment");
  phase->add_option("--trials", pa.trials, "Trials per grid cell");
  phase->add_option("--seed", pa.seed, "Base seed for all streams");
  phase->add_option("--matrix-file", pa.matrix_file,
                    "Orthogonal source matrix for --ensemble ortho");
  phase->add_option("--out", pa.out, "CSV output path")->required();
  phase->add_option("--svg", pa.svg, "Optional SVG plot path");
  phase->add_option("--kstar", pa.kstar,
                    "Optional CSV path for the threshold-crossing summary");
  phase->callback([&] { rc = run_phase(pa); });

  RecoverArgs ra;
  auto* recover = app.add_subcommand(
      "recover", "Solve one seeded recovery instance and report the verdict");
  recover->add_option("--ensemble", ra.ensemble, "Measurement ensemble")
      ->check(CLI::IsMember(ensembles));
  recover->add_option("--amp", ra.amp, "Nonzero amplitude model")
      ->check(CLI::IsMember(amplitudes));
  recover->add_option("--n", ra.n, "Signal dimension")->required();
  recover->add_option("--r", ra.r, "Sparsity")->required();
  recover->add_option("--k", ra.k, "Measurement count")->required();
  recover->add_option("--seed", ra.seed, "Seed for matrix and signal draws");
  recover->add_option("--matrix-file", ra.matrix_file,
                      "Orthogonal source matrix for --ensemble ortho");
  recover->add_option("--dump-lp", ra.dump_lp,
                      "Write the solved linear program to this file");
  recover->callback([&] { rc = run_recover(ra); });

  RicArgs ia;
  auto* ric = app.add_subcommand(
      "ric", "Restricted-isometry extremes of a matrix at sparsity r");
  ric->add_option("--matrix-file", ia.matrix_file, "Matrix to analyze")
      ->required();
  ric->add_option("--r", ia.r, "Support size")->required();
  auto* exact_flag =
      ric->add_flag("--exact", ia.exact, "Enumerate every support (default)");
  auto* sampled_opt =
      ric->add_option("--sampled", ia.sampled,
                      "Sample this many supports instead of enumerating");
  exact_flag->excludes(sampled_opt);
  sampled_opt->excludes(exact_flag);
  ric->add_option("--seed", ia.seed, "Seed for --sampled support draws");
  ric->callback([&] { rc = run_ric(ia); });

  WidthArgs wa;
  auto* width = app.add_subcommand(
      "width", "Monte-Carlo mean width of the rearrangement body");
  width->add_option("--n", wa.n, "Ambient dimension")->required();
  width->add_option("--r", wa.r, "Block size")->required();
  width->add_option("--samples", wa.samples, "Gaussian samples")->required();
  width->add_option("--seed", wa.seed, "Seed for the Gaussian stream");
  width->callback([&] { rc = run_width(wa); });

  EscapeArgs ea;
  auto* escape = app.add_subcommand(
      "escape", "Kernel-escape probability and measurement-count threshold");
  auto* k_opt = escape->add_option("--k", ea.k, "Measurement count");
  auto* w_opt = escape->add_option("--w", ea.w, "Mean width of the set");
  auto* r_opt = escape->add_option("--r", ea.r, "Sparsity");
  auto* n_opt = escape->add_option("--n", ea.n, "Signal dimension");
  escape->callback([&] {
    ea.has_k = k_opt->count() > 0;
    ea.has_w = w_opt->count() > 0;
    ea.has_r = r_opt->count() > 0;
    ea.has_n = n_opt->count() > 0;
    rc = run_escape(ea);
  });

  ConeCheckArgs ca;
  auto* cone = app.add_subcommand(
      "cone-check",
      "Frequency of descent-cone and kernel intersection over random trials");
  cone->add_option("--n", ca.n, "Signal dimension")->required();
  cone->add_option("--r", ca.r, "Sparsity")->required();
  cone->add_option("--k", ca.k, "Measurement count")->required();
  cone->add_option("--trials", ca.trials, "Random instances")->required();
  cone->add_option("--seed", ca.seed, "Seed for matrix and signal draws");
  cone->callback([&] { rc = run_cone_check(ca); });

  MaureyArgs ma;
  auto* maurey = app.add_subcommand(
      "maurey", "Empirical sparsification error of the uniform ball point");
  maurey->add_option("--n", ma.n, "Ambient dimension")->required();
  maurey->add_option("--m", ma.m, "Terms in the empirical average")
      ->required();
  maurey->add_option("--trials", ma.trials, "Independent repetitions")
      ->required();
  maurey->add_option("--seed", ma.seed, "Seed for the sampling stream");
  maurey->callback([&] { rc = run_maurey(ma); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const sb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
