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

#include <memory>
#include <span>
#include <vector>

namespace cw {

enum class Mode { a, b };

/// Hyperfine qubit of ion a: |down> = |F=2, mF=-2>, |up> = |1, -1>.
enum class Spin { down = 0, up = 1 };

/// Truncated tensor-product space (spin_a) x motion_a x motion_b.
///
/// Basis ordering is spin slowest, then motion a, then motion b:
///   index = (spin * dim_a + n_a) * dim_b + n_b
/// with spin omitted (treated as 0) when the space has no spin factor.
///
/// Every basis state carries an excitation charge
///   Q = n_a + n_b + [spin == down]
/// which is conserved by the beam-splitter Hamiltonian and by the
/// blue-sideband coupling |n, down> <-> |n+1, up>. States are grouped into
/// charge sectors so that operators can be stored block-sparse.
class FockSpace {
 public:
  struct BasisState {
    Spin spin;
    int n_a;
    int n_b;
  };

  /// Throws DomainError unless both dimensions are >= 2.
  FockSpace(int dim_a, int dim_b, bool spin_a = false);

  [[nodiscard]] int dim_a() const { return dim_a_; }
  [[nodiscard]] int dim_b() const { return dim_b_; }
  [[nodiscard]] int dim(Mode m) const { return m == Mode::a ? dim_a_ : dim_b_; }
  [[nodiscard]] bool has_spin() const { return spin_a_; }
  [[nodiscard]] int dimension() const { return (spin_a_ ? 2 : 1) * dim_a_ * dim_b_; }

  [[nodiscard]] int index(Spin s, int n_a, int n_b) const { return (static_cast<int>(s) * dim_a_ + n_a) * dim_b_ + n_b; }
  [[nodiscard]] int index(int n_a, int n_b) const { return index(Spin::down, n_a, n_b); }
  [[nodiscard]] BasisState state(int index) const;

  [[nodiscard]] int charge(int index) const;
  [[nodiscard]] int max_charge() const { return dim_a_ + dim_b_ - 2 + (spin_a_ ? 1 : 0); }

  /// Basis indices with the given charge, ascending.
  [[nodiscard]] std::span<const int> sector(int charge) const;
  /// Position of a basis index inside its charge sector.
  [[nodiscard]] int local_index(int index) const { return sectors_->local[index]; }

  /// Smallest per-mode dimension N >= 2 for which the truncated,
  /// renormalized thermal distribution with mean nbar puts less than
  /// tail_tol on the top level N - 1.
  static int required_dimension(double nbar, double tail_tol);

  friend bool operator==(const FockSpace& x, const FockSpace& y) {
    return x.dim_a_ == y.dim_a_ && x.dim_b_ == y.dim_b_ && x.spin_a_ == y.spin_a_;
  }

 private:
  struct Sectors {
    std::vector<std::vector<int>> members;
    std::vector<int> local;
  };

  int dim_a_;
  int dim_b_;
  bool spin_a_;
  std::shared_ptr<const Sectors> sectors_;
};

}  // namespace cw
