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

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "coupled_wells/fock_space.hpp"

namespace cw {

using Complex = std::complex<double>;
using SparseComplexMatrix = Eigen::SparseMatrix<Complex>;

/// One dense sub-matrix rho[ket sector, bra sector], column-major.
struct Block {
  int ket_charge;
  int bra_charge;
  int rows;
  int cols;
  std::size_t offset;
};

/// Storage layout of a density operator. A coherence order k = Q_ket - Q_bra
/// is either fully present (every sector pair with that difference) or
/// absent. Heating jumps move weight between (Q, Q') and (Q +- 1, Q' +- 1),
/// so a full band is closed under the dynamics.
class BlockLayout {
 public:
  BlockLayout(FockSpace space, std::vector<int> coherence_orders);

  [[nodiscard]] const FockSpace& space() const { return space_; }
  [[nodiscard]] std::span<const int> coherence_orders() const { return orders_; }
  [[nodiscard]] std::span<const Block> blocks() const { return blocks_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  /// Index into blocks() of (ket_charge, bra_charge), or -1 when absent.
  [[nodiscard]] int find(int ket_charge, int bra_charge) const;

 private:
  FockSpace space_;
  std::vector<int> orders_;
  std::vector<Block> blocks_;
  std::vector<int> lookup_;
  std::size_t size_ = 0;
};

/// Truncated Fock-space density operator, stored block-sparse by charge
/// sector (see FockSpace). Value type; copies share the immutable layout.
class DensityOperator {
 public:
  /// Product of single-mode thermal states, each truncated and renormalized,
  /// times |spin><spin| when the space has a spin factor (default down).
  /// Throws TruncationError when a mode's top level would hold tail_tol or more.
  static DensityOperator thermal(const FockSpace& space, double nbar_a, double nbar_b,
                                 std::optional<Spin> spin = std::nullopt, double tail_tol = 1e-6);

  /// |n_a, n_b> (with spin s when present).
  static DensityOperator fock(const FockSpace& space, int n_a, int n_b, Spin s = Spin::down);

  /// |psi><psi| for a normalized state vector in the basis order of FockSpace.
  static DensityOperator pure(const FockSpace& space, const Eigen::VectorXcd& psi);

  /// Any dense matrix; only coherence orders with a non-zero entry are kept.
  static DensityOperator from_matrix(const FockSpace& space, const Eigen::MatrixXcd& rho);

  /// All-zero operator with the given layout; used by the integrator.
  static DensityOperator zeros(std::shared_ptr<const BlockLayout> layout);

  [[nodiscard]] const FockSpace& space() const { return layout_->space(); }
  [[nodiscard]] const BlockLayout& layout() const { return *layout_; }
  [[nodiscard]] const std::shared_ptr<const BlockLayout>& shared_layout() const { return layout_; }
  [[nodiscard]] std::span<const Complex> data() const { return data_; }
  [[nodiscard]] std::span<Complex> data() { return data_; }

  [[nodiscard]] Eigen::Map<const Eigen::MatrixXcd> block(int i) const;
  [[nodiscard]] Eigen::Map<Eigen::MatrixXcd> block(int i);

  /// Matrix element <row| rho |col> in the full basis.
  [[nodiscard]] Complex operator()(int row, int col) const;
  [[nodiscard]] Eigen::MatrixXcd to_matrix() const;

  [[nodiscard]] Complex trace() const;
  [[nodiscard]] double mean_occupation(Mode mode) const;
  [[nodiscard]] double spin_up_probability() const;
  /// Marginal population of the highest retained Fock level of `mode`.
  [[nodiscard]] double top_level_population(Mode mode) const;
  /// Population of |n> in `mode` (marginal).
  [[nodiscard]] double level_population(Mode mode, int n) const;

  /// max |rho - rho^dagger| over all elements.
  [[nodiscard]] double hermiticity_defect() const;
  /// Smallest eigenvalue of the Hermitian part. Connected groups of sectors
  /// are diagonalized independently.
  [[nodiscard]] double min_eigenvalue() const;

  /// rho -> U rho U^dagger for a unitary that preserves charge; `unitary[Q]`
  /// acts on sector Q in local coordinates.
  [[nodiscard]] DensityOperator conjugated(std::span<const SparseComplexMatrix> unitary) const;

  /// rho -> (1 - p) rho + p (I/2 (x) Tr_spin rho). Requires a spin factor.
  [[nodiscard]] DensityOperator depolarize_spin(double p) const;

  DensityOperator& operator*=(double s);

  /// Row-major dump: a header line naming the basis ordering and the
  /// dimensions, then one line per row of comma-separated re,im pairs.
  void write_csv(std::ostream& out) const;

 private:
  explicit DensityOperator(std::shared_ptr<const BlockLayout> layout);

  [[nodiscard]] double diagonal_sum(auto&& weight) const;

  std::shared_ptr<const BlockLayout> layout_;
  std::vector<Complex> data_;
};

}  // namespace cw
