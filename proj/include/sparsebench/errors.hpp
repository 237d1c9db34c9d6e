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

#ifndef SPARSEBENCH_ERRORS_HPP_
#define SPARSEBENCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sparsebench {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatch: non-square input, inconsistent vector/matrix sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the documented domain (k > n, r out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Matrix fails a rank precondition (kernel of a row-deficient operator).
class RankError : public Error {
 public:
  using Error::Error;
};

// Iterative numerical procedure failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Input violates a structural invariant (non-orthogonal rows, bad
// decomposition of identity, malformed file contents).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Subset enumeration would exceed the configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// The linear system / program admits no feasible point.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search finished without a witness.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling exceeded its attempt bound.
class SamplingError : public Error {
 public:
  using Error::Error;
};

// File could not be read or written; message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sparsebench

#endif  // SPARSEBENCH_ERRORS_HPP_
