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

#include <Eigen/SVD>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "sparsebench/errors.hpp"
#include "sparsebench/numerics.hpp"

namespace sb = sparsebench;

namespace {

std::string temp_path(const std::string& stem) {
  auto dir = std::filesystem::temp_directory_path();
  return (dir / ("sparsebench_test_" + stem)).string();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& stem) : path(temp_path(stem)) {}
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("extreme eigenvalues of diagonal matrices") {
  sb::RealMatrix identity = sb::RealMatrix::Identity(3, 3);
  auto [lo, hi] = sb::extreme_eigenvalues(identity);
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));

  sb::RealMatrix diag = sb::RealMatrix::Zero(2, 2);
  diag(0, 0) = 0.25;
  diag(1, 1) = 4.0;
  auto [dlo, dhi] = sb::extreme_eigenvalues(diag);
  CHECK(dlo == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(dhi == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("extreme eigenvalues of a correlated gram matrix") {
  // Columns (1, 0) and (1, 1)/sqrt(2): gram [[1, 1/sqrt(2)], [1/sqrt(2), 1]]
  // has eigenvalues 1 -+ 1/sqrt(2).
  const double s = 1.0 / std::sqrt(2.0);
  sb::RealMatrix a(2, 2);
  a << 1.0, s, 0.0, s;
  sb::RealMatrix gram = a.transpose() * a;
  auto [lo, hi] = sb::extreme_eigenvalues(gram);
  CHECK(std::abs(lo - (1.0 - s)) <= 1e-12);
  CHECK(std::abs(hi - (1.0 + s)) <= 1e-12);
}

TEST_CASE("gram eigenvalues agree with squared singular values") {
  sb::RngStream rng(7, 1);
  for (int rep = 0; rep < 5; ++rep) {
    sb::RealMatrix a(6, 4);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = rng.normal();
    sb::RealMatrix gram = a.transpose() * a;
    auto [lo, hi] = sb::extreme_eigenvalues(gram);
    Eigen::JacobiSVD<sb::RealMatrix> svd(a);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(3);
    CHECK(std::abs(hi - smax * smax) <= 1e-9 * (1.0 + smax * smax));
    CHECK(std::abs(lo - smin * smin) <= 1e-9 * (1.0 + smax * smax));
    CHECK(lo >= -1e-9);
  }
}

TEST_CASE("extreme eigenvalues of a hermitian complex matrix") {
  sb::ComplexMatrix h(2, 2);
  h(0, 0) = {2.0, 0.0};
  h(0, 1) = {0.0, 1.0};
  h(1, 0) = {0.0, -1.0};
  h(1, 1) = {2.0, 0.0};
  auto [lo, hi] = sb::extreme_eigenvalues(h);
  CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hi == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("extreme eigenvalues input validation") {
  sb::RealMatrix rect = sb::RealMatrix::Zero(2, 3);
  CHECK_THROWS_AS(sb::extreme_eigenvalues(rect), sb::DimensionError);

  sb::RealMatrix skew(2, 2);
  skew << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(sb::extreme_eigenvalues(skew), sb::ValidationError);

  sb::ComplexMatrix bad(2, 2);
  bad(0, 0) = {1.0, 0.0};
  bad(0, 1) = {1.0, 0.0};
  bad(1, 0) = {0.5, 0.0};
  bad(1, 1) = {1.0, 0.0};
  CHECK_THROWS_AS(sb::extreme_eigenvalues(bad), sb::ValidationError);
}

TEST_CASE("kernel basis of coordinate projections") {
  sb::RealMatrix m(2, 3);
  m << 1.0, 0.0, 0.0, 0.0, 1.0, 0.0;
  sb::RealMatrix basis = sb::kernel_basis(m);
  REQUIRE(basis.rows() == 3);
  REQUIRE(basis.cols() == 1);
  CHECK(std::abs(std::abs(basis(2, 0)) - 1.0) <= 1e-12);
  CHECK((m * basis).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("kernel basis of a single summing row") {
  sb::RealMatrix m(1, 2);
  m << 1.0, 1.0;
  sb::RealMatrix basis = sb::kernel_basis(m);
  REQUIRE(basis.rows() == 2);
  REQUIRE(basis.cols() == 1);
  // Kernel of [1 1] is the span of (1, -1)/sqrt(2).
  CHECK(std::abs(basis(0, 0) + basis(1, 0)) <= 1e-12);
  CHECK(std::abs(basis.col(0).norm() - 1.0) <= 1e-12);
}

TEST_CASE("kernel basis of a random wide matrix is orthonormal") {
  sb::RngStream rng(11, 2);
  sb::RealMatrix m(4, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = rng.normal();
  sb::RealMatrix basis = sb::kernel_basis(m);
  REQUIRE(basis.rows() == 8);
  REQUIRE(basis.cols() == 4);
  CHECK((m * basis).cwiseAbs().maxCoeff() <= 1e-9);
  sb::RealMatrix prod = basis.transpose() * basis;
  CHECK((prod - sb::RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <=
        1e-10);
}

TEST_CASE("kernel basis input validation") {
  sb::RealMatrix square = sb::RealMatrix::Identity(2, 2);
  CHECK_THROWS_AS(sb::kernel_basis(square), sb::DimensionError);

  sb::RealMatrix deficient(2, 3);
  deficient << 1.0, 1.0, 1.0, 1.0, 1.0, 1.0;
  CHECK_THROWS_AS(sb::kernel_basis(deficient), sb::RankError);
}

TEST_CASE("sorted magnitudes with index tie-breaking") {
  sb::RealVector x(3);
  x << 0.0, -3.0, 1.0;
  sb::SortedAbs s = sb::sorted_abs_desc(x);
  CHECK(s.values(0) == 3.0);
  CHECK(s.values(1) == 1.0);
  CHECK(s.values(2) == 0.0);
  CHECK(s.permutation == std::vector<int>{1, 2, 0});

  sb::RealVector flat(4);
  flat << 0.5, 0.5, 0.5, 0.5;
  sb::SortedAbs sf = sb::sorted_abs_desc(flat);
  CHECK(sf.permutation == std::vector<int>{0, 1, 2, 3});

  sb::RealVector pair(2);
  pair << -2.0, 2.0;
  sb::SortedAbs sp = sb::sorted_abs_desc(pair);
  CHECK(sp.values(0) == 2.0);
  CHECK(sp.permutation == std::vector<int>{0, 1});
}

TEST_CASE("rng streams are deterministic per (seed, stream)") {
  sb::RngStream a(42, 9);
  sb::RngStream b(42, 9);
  for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());
  for (int i = 0; i < 64; ++i) {
    double x = a.normal();
    double y = b.normal();
    CHECK(x == y);
  }
}

TEST_CASE("distinct streams and seeds decorrelate") {
  sb::RngStream a(42, 9);
  sb::RngStream b(42, 10);
  sb::RngStream c(43, 9);
  int same_ab = 0;
  int same_ac = 0;
  for (int i = 0; i < 32; ++i) {
    std::uint64_t va = a.next_u64();
    if (va == b.next_u64()) ++same_ab;
    if (va == c.next_u64()) ++same_ac;
  }
  CHECK(same_ab == 0);
  CHECK(same_ac == 0);
}

TEST_CASE("uniform draws live in the unit interval with mean one half") {
  sb::RngStream rng(5, 5);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / 10000.0 - 0.5) <= 0.02);
}

TEST_CASE("normal draws have the right first two moments") {
  sb::RngStream rng(6, 6);
  double sum = 0.0;
  double sumsq = 0.0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    double g = rng.normal();
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::abs(sum / draws) <= 0.05);
  CHECK(std::abs(sumsq / draws - 1.0) <= 0.05);
}

TEST_CASE("uniform_int stays in range and covers it") {
  sb::RngStream rng(8, 3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t v = rng.uniform_int(6);
    REQUIRE(v < 6);
    seen.insert(v);
  }
  CHECK(seen.size() == 6);
  CHECK(rng.uniform_int(1) == 0);
  CHECK_THROWS_AS(rng.uniform_int(0), sb::ParameterError);
}

TEST_CASE("k_subset returns sorted distinct indices in range") {
  sb::RngStream rng(9, 4);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<int> s = rng.k_subset(10, 3);
    REQUIRE(s.size() == 3);
    CHECK(s[0] < s[1]);
    CHECK(s[1] < s[2]);
    CHECK(s[0] >= 0);
    CHECK(s[2] < 10);
  }
  CHECK(rng.k_subset(5, 5) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(rng.k_subset(7, 0).empty());
  CHECK_THROWS_AS(rng.k_subset(3, 4), sb::ParameterError);
}

TEST_CASE("k_subset is close to uniform over singletons") {
  sb::RngStream rng(10, 1);
  std::vector<int> counts(8, 0);
  const int draws = 8000;
  for (int i = 0; i < draws; ++i) ++counts[rng.k_subset(8, 1)[0]];
  for (int c : counts) {
    // Expected 1000 each; 5 sigma of binomial(8000, 1/8) is about 148.
    CHECK(std::abs(c - 1000) <= 160);
  }
}

TEST_CASE("derived stream ids separate tags, trials, and coordinates") {
  CHECK(sb::derive_stream_id("phase/matrix", 3) ==
        sb::derive_stream_id("phase/matrix", 3));
  CHECK(sb::derive_stream_id("phase/matrix", 3) !=
        sb::derive_stream_id("phase/matrix", 4));
  CHECK(sb::derive_stream_id("phase/matrix", 3) !=
        sb::derive_stream_id("phase/signal", 3));
  CHECK(sb::derive_stream_id("grid", {1, 2, 3}) ==
        sb::derive_stream_id("grid", {1, 2, 3}));
  CHECK(sb::derive_stream_id("grid", {1, 2, 3}) !=
        sb::derive_stream_id("grid", {1, 2, 4}));
  CHECK(sb::derive_stream_id("grid", {2, 1}) !=
        sb::derive_stream_id("grid", {1, 2}));
}

TEST_CASE("format_double round trips exactly") {
  const double cases[] = {1.0 / 3.0, 0.1,    -2.5e-7, 1e100,
                          0.0,       1e-308, 3.141592653589793};
  for (double v : cases) {
    std::string text = sb::format_double(v);
    double back = 0.0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), back);
    REQUIRE(ec == std::errc());
    REQUIRE(ptr == text.data() + text.size());
    CHECK(back == v);
  }
}

TEST_CASE("real matrix files round trip bitwise") {
  TempFile tmp("real_roundtrip.txt");
  sb::RealMatrix m(2, 3);
  m << 1.0 / 3.0, -2.5e-7, 1e8, 0.0, 3.141592653589793, 1e-308;
  sb::write_matrix_file(tmp.path, m);
  sb::AnyMatrix any = sb::read_matrix_file(tmp.path);
  REQUIRE(std::holds_alternative<sb::RealMatrix>(any));
  const sb::RealMatrix& back = std::get<sb::RealMatrix>(any);
  REQUIRE(back.rows() == 2);
  REQUIRE(back.cols() == 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(back(i, j) == m(i, j));
}

TEST_CASE("complex matrix files round trip bitwise") {
  TempFile tmp("complex_roundtrip.txt");
  sb::ComplexMatrix m(2, 2);
  m(0, 0) = {1.5, -2.25};
  m(0, 1) = {-1.0 / 3.0, 1e-12};
  m(1, 0) = {0.0, -1.0};
  m(1, 1) = {3.0, 0.0};
  sb::write_matrix_file(tmp.path, m);
  sb::AnyMatrix any = sb::read_matrix_file(tmp.path);
  REQUIRE(std::holds_alternative<sb::ComplexMatrix>(any));
  const sb::ComplexMatrix& back = std::get<sb::ComplexMatrix>(any);
  REQUIRE(back.rows() == 2);
  REQUIRE(back.cols() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(back(i, j).real() == m(i, j).real());
      CHECK(back(i, j).imag() == m(i, j).imag());
    }
}

TEST_CASE("matrix file header carries dimensions and field") {
  TempFile tmp("header.txt");
  sb::RealMatrix m = sb::RealMatrix::Identity(2, 2);
  sb::write_matrix_file(tmp.path, m);
  std::ifstream in(tmp.path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "2,2,real");
}

TEST_CASE("matrix file reader rejects malformed input") {
  CHECK_THROWS_AS(sb::read_matrix_file(temp_path("missing_file.txt")),
                  sb::IoError);

  TempFile bad_field("bad_field.txt");
  {
    std::ofstream out(bad_field.path);
    out << "2,2,quaternion\n1,0\n0,1\n";
  }
  CHECK_THROWS_AS(sb::read_matrix_file(bad_field.path), sb::ValidationError);

  TempFile short_row("short_row.txt");
  {
    std::ofstream out(short_row.path);
    out << "2,2,real\n1,0\n0\n";
  }
  CHECK_THROWS_AS(sb::read_matrix_file(short_row.path), sb::ValidationError);

  TempFile bad_entry("bad_entry.txt");
  {
    std::ofstream out(bad_entry.path);
    out << "1,2,real\n1,oops\n";
  }
  CHECK_THROWS_AS(sb::read_matrix_file(bad_entry.path), sb::ValidationError);

  TempFile missing_row("missing_row.txt");
  {
    std::ofstream out(missing_row.path);
    out << "2,2,real\n1,0\n";
  }
  CHECK_THROWS_AS(sb::read_matrix_file(missing_row.path), sb::ValidationError);
}

}  // TEST_SUITE
