// Copyright 2026 The coupled-wells Authors
//
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

#pragma once

#include <stdexcept>
#include <string>

namespace cw {

/// Argument outside the physical domain of an operation (non-positive
/// separation, negative occupation, ratio >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The coupled equations of motion have no stable equilibrium.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Fock-space truncation is too small for the populations involved.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_dimension)
      : std::runtime_error(what), required_dimension_(required_dimension) {}

  /// Smallest per-mode dimension that would have been accepted, or 0 when
  /// it is not known at the point of failure.
  [[nodiscard]] int required_dimension() const { return required_dimension_; }

 private:
  int required_dimension_;
};

/// Integrator step too coarse for the generator, or trace drift over budget.
class StepSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cw
