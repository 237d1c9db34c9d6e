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

#include "sparsebench/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sparsebench/errors.hpp"

namespace sparsebench {

namespace {

template <typename Matrix>
std::pair<double, double> extreme_eigenvalues_impl(const Matrix& G) {
  if (G.rows() != G.cols()) {
    throw DimensionError("extreme_eigenvalues: matrix is " +
                         std::to_string(G.rows()) + "x" +
                         std::to_string(G.cols()) + ", expected square");
  }
  const double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
  const double asym = (G - G.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    throw ValidationError("extreme_eigenvalues: matrix is not Hermitian "
                          "within tolerance");
  }
  Matrix H = ((G + G.adjoint()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("extreme_eigenvalues: eigen iteration failed");
  }
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

// SplitMix64 finalizer; full-period bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::string format_complex(std::complex<double> v) {
  const double re = v.real();
  const double im = v.imag();
  std::string out = format_double(re);
  out += std::signbit(im) ? '-' : '+';
  out += format_double(std::abs(im));
  out += 'i';
  return out;
}

double parse_real_token(std::string_view token, const std::string& path) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ValidationError("matrix file " + path + ": bad numeric entry '" +
                          std::string(token) + "'");
  }
  return value;
}

std::complex<double> parse_complex_token(std::string_view token,
                                         const std::string& path) {
  if (token.empty() || token.back() != 'i') {
    throw ValidationError("matrix file " + path + ": complex entry '" +
                          std::string(token) + "' lacks trailing 'i'");
  }
  std::string_view body = token.substr(0, token.size() - 1);
  // Split at the last sign that does not follow an exponent marker.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    const char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw ValidationError("matrix file " + path + ": complex entry '" +
                          std::string(token) + "' is not of the form a+bi");
  }
  const double re = parse_real_token(body.substr(0, split), path);
  // from_chars rejects a leading '+', so apply the sign separately.
  const double mag = parse_real_token(body.substr(split + 1), path);
  const double im = body[split] == '-' ? -mag : mag;
  return {re, im};
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::pair<double, double> extreme_eigenvalues(const RealMatrix& G) {
  return extreme_eigenvalues_impl(G);
}

std::pair<double, double> extreme_eigenvalues(const ComplexMatrix& G) {
  return extreme_eigenvalues_impl(G);
}

RealMatrix kernel_basis(const RealMatrix& M) {
  const Eigen::Index k = M.rows();
  const Eigen::Index n = M.cols();
  if (k >= n) {
    throw DimensionError("kernel_basis: need strictly more columns than rows");
  }
  Eigen::JacobiSVD<RealMatrix> svd(M, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (sigma(0) <= 0.0 || sigma(k - 1) <= 1e-10 * sigma(0)) {
    throw RankError("kernel_basis: matrix is rank-deficient");
  }
  return svd.matrixV().rightCols(n - k);
}

SortedAbs sorted_abs_desc(const RealVector& x) {
  const int n = static_cast<int>(x.size());
  SortedAbs out;
  out.permutation.resize(n);
  std::iota(out.permutation.begin(), out.permutation.end(), 0);
  std::sort(out.permutation.begin(), out.permutation.end(),
            [&x](int a, int b) {
              const double ma = std::abs(x(a));
              const double mb = std::abs(x(b));
              if (ma != mb) return ma > mb;
              return a < b;
            });
  out.values.resize(n);
  for (int p = 0; p < n; ++p) out.values(p) = std::abs(x(out.permutation[p]));
  return out;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed),
      stream_id_(stream_id),
      counter_(mix64(seed ^ kGolden)),
      gamma_(mix64(stream_id) | 1ull) {}

std::uint64_t RngStream::next_u64() {
  counter_ += gamma_;
  return mix64(counter_);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 =
      (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

std::uint64_t RngStream::uniform_int(std::uint64_t bound) {
  if (bound == 0) {
    throw ParameterError("RngStream::uniform_int: bound must be positive");
  }
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw = next_u64();
  while (draw >= limit) draw = next_u64();
  return draw % bound;
}

std::vector<int> RngStream::k_subset(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw ParameterError("RngStream::k_subset: need 0 <= k <= n, n >= 1");
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(uniform_int(
                          static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> subset(pool.begin(), pool.begin() + k);
  std::sort(subset.begin(), subset.end());
  return subset;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::uint64_t derive_stream_id(std::string_view task_tag,
                               std::uint64_t trial) {
  return derive_stream_id(task_tag, {trial});
}

std::uint64_t derive_stream_id(std::string_view task_tag,
                               std::initializer_list<std::uint64_t> coords) {
  std::uint64_t h = fnv1a64(task_tag);
  for (const std::uint64_t c : coords) h = mix64(h ^ (c + kGolden));
  return h;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw NumericalError("format_double: conversion failed");
  }
  return std::string(buf, ptr);
}

namespace {

template <typename Matrix, typename Formatter>
void write_matrix_file_impl(const std::string& path, const Matrix& M,
                            const char* field, Formatter format_entry) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << M.rows() << ',' << M.cols() << ',' << field << '\n';
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_entry(M(i, j));
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace

void write_matrix_file(const std::string& path, const RealMatrix& M) {
  write_matrix_file_impl(path, M, "real",
                         [](double v) { return format_double(v); });
}

void write_matrix_file(const std::string& path, const ComplexMatrix& M) {
  write_matrix_file_impl(path, M, "complex",
                         [](std::complex<double> v) { return format_complex(v); });
}

AnyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::string header;
  if (!std::getline(in, header)) {
    throw ValidationError("matrix file " + path + ": missing header");
  }
  const auto fields = split_csv_line(header);
  if (fields.size() != 3) {
    throw ValidationError("matrix file " + path +
                          ": header must be rows,cols,field");
  }
  long rows = 0;
  long cols = 0;
  try {
    rows = std::stol(std::string(fields[0]));
    cols = std::stol(std::string(fields[1]));
  } catch (const std::exception&) {
    throw ValidationError("matrix file " + path + ": bad header dimensions");
  }
  if (rows < 1 || cols < 1) {
    throw ValidationError("matrix file " + path + ": bad header dimensions");
  }
  const std::string_view field = fields[2];
  const bool complex_field = field == "complex";
  if (!complex_field && field != "real") {
    throw ValidationError("matrix file " + path +
                          ": field must be real or complex");
  }
  RealMatrix real;
  ComplexMatrix cplx;
  if (complex_field) {
    cplx.resize(rows, cols);
  } else {
    real.resize(rows, cols);
  }
  std::string line;
  for (long i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) {
      throw ValidationError("matrix file " + path + ": expected " +
                            std::to_string(rows) + " rows, found " +
                            std::to_string(i));
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto entries = split_csv_line(line);
    if (static_cast<long>(entries.size()) != cols) {
      throw ValidationError("matrix file " + path + ": row " +
                            std::to_string(i) + " has " +
                            std::to_string(entries.size()) + " entries, want " +
                            std::to_string(cols));
    }
    for (long j = 0; j < cols; ++j) {
      if (complex_field) {
        cplx(i, j) = parse_complex_token(entries[j], path);
      } else {
        real(i, j) = parse_real_token(entries[j], path);
      }
    }
  }
  if (complex_field) return AnyMatrix(std::move(cplx));
  return AnyMatrix(std::move(real));
}

}  // namespace sparsebench
