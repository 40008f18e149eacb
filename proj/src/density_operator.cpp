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

#include "coupled_wells/density_operator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>

#include "coupled_wells/errors.hpp"

namespace cw {
namespace {

std::vector<double> truncated_thermal(double nbar, int dim) {
  std::vector<double> p(dim, 0.0);
  if (nbar == 0.0) {
    p[0] = 1.0;
    return p;
  }
  const double x = nbar / (1.0 + nbar);
  double w = 1.0;
  for (int n = 0; n < dim; ++n, w *= x) p[n] = w;
  const double norm = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= norm;
  return p;
}

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

BlockLayout::BlockLayout(FockSpace space, std::vector<int> coherence_orders)
    : space_(std::move(space)), orders_(std::move(coherence_orders)) {
  std::sort(orders_.begin(), orders_.end());
  orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());

  const int n_charges = space_.max_charge() + 1;
  lookup_.assign(static_cast<std::size_t>(n_charges) * n_charges, -1);
  for (int k : orders_) {
    for (int q = std::max(0, k); q < n_charges && q - k < n_charges; ++q) {
      const int rows = static_cast<int>(space_.sector(q).size());
      const int cols = static_cast<int>(space_.sector(q - k).size());
      lookup_[static_cast<std::size_t>(q) * n_charges + (q - k)] = static_cast<int>(blocks_.size());
      blocks_.push_back({q, q - k, rows, cols, size_});
      size_ += static_cast<std::size_t>(rows) * cols;
    }
  }
}

int BlockLayout::find(int ket_charge, int bra_charge) const {
  const int n_charges = space_.max_charge() + 1;
  if (ket_charge < 0 || bra_charge < 0 || ket_charge >= n_charges || bra_charge >= n_charges) return -1;
  return lookup_[static_cast<std::size_t>(ket_charge) * n_charges + bra_charge];
}

DensityOperator::DensityOperator(std::shared_ptr<const BlockLayout> layout)
    : layout_(std::move(layout)), data_(layout_->size(), Complex(0.0, 0.0)) {}

DensityOperator DensityOperator::zeros(std::shared_ptr<const BlockLayout> layout) {
  return DensityOperator(std::move(layout));
}

DensityOperator DensityOperator::thermal(const FockSpace& space, double nbar_a, double nbar_b,
                                         std::optional<Spin> spin, double tail_tol) {
  if (!(nbar_a >= 0.0) || !(nbar_b >= 0.0)) throw DomainError("mean occupations must be non-negative");
  if (spin && !space.has_spin()) throw DomainError("spin state requested on a space without a spin factor");

  const auto pa = truncated_thermal(nbar_a, space.dim_a());
  const auto pb = truncated_thermal(nbar_b, space.dim_b());
  const bool short_a = pa.back() >= tail_tol;
  const bool short_b = pb.back() >= tail_tol;
  if (short_a || short_b) {
    // report a dimension that suffices for both modes
    const int need = std::max(FockSpace::required_dimension(nbar_a, tail_tol),
                              FockSpace::required_dimension(nbar_b, tail_tol));
    const char* mode = short_a ? "a" : "b";
    throw TruncationError(std::string("truncation of mode ") + mode + " too small for nbar = " +
                              std::to_string(short_a ? nbar_a : nbar_b) + "; need dimension >= " +
                              std::to_string(need),
                          need);
  }

  DensityOperator rho(std::make_shared<const BlockLayout>(space, std::vector<int>{0}));
  const Spin s = spin.value_or(Spin::down);
  for (int na = 0; na < space.dim_a(); ++na) {
    for (int nb = 0; nb < space.dim_b(); ++nb) {
      const int i = space.index(s, na, nb);
      const int blk = rho.layout().find(space.charge(i), space.charge(i));
      const int local = space.local_index(i);
      rho.block(blk)(local, local) = pa[na] * pb[nb];
    }
  }
  return rho;
}

DensityOperator DensityOperator::fock(const FockSpace& space, int n_a, int n_b, Spin s) {
  if (n_a < 0 || n_b < 0 || n_a >= space.dim_a() || n_b >= space.dim_b()) {
    throw DomainError("Fock state outside the truncated space");
  }
  if (s == Spin::up && !space.has_spin()) throw DomainError("spin state requested on a space without a spin factor");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dimension());
  psi(space.index(s, n_a, n_b)) = 1.0;
  return pure(space, psi);
}

DensityOperator DensityOperator::pure(const FockSpace& space, const Eigen::VectorXcd& psi) {
  if (psi.size() != space.dimension()) throw DomainError("state vector size does not match the space");
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) throw DomainError("state vector is not normalized");
  return from_matrix(space, psi * psi.adjoint());
}

DensityOperator DensityOperator::from_matrix(const FockSpace& space, const Eigen::MatrixXcd& m) {
  const int dim = space.dimension();
  if (m.rows() != dim || m.cols() != dim) throw DomainError("matrix size does not match the space");

  std::vector<int> orders;
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      if (m(r, c) != Complex(0.0, 0.0)) orders.push_back(space.charge(r) - space.charge(c));
    }
  }
  if (orders.empty()) orders.push_back(0);

  DensityOperator rho(std::make_shared<const BlockLayout>(space, std::move(orders)));
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      const int blk = rho.layout().find(space.charge(r), space.charge(c));
      if (blk >= 0) rho.block(blk)(space.local_index(r), space.local_index(c)) = m(r, c);
    }
  }
  return rho;
}

Eigen::Map<const Eigen::MatrixXcd> DensityOperator::block(int i) const {
  const Block& b = layout_->blocks()[i];
  return {data_.data() + b.offset, b.rows, b.cols};
}

Eigen::Map<Eigen::MatrixXcd> DensityOperator::block(int i) {
  const Block& b = layout_->blocks()[i];
  return {data_.data() + b.offset, b.rows, b.cols};
}

Complex DensityOperator::operator()(int row, int col) const {
  const auto& sp = space();
  const int blk = layout_->find(sp.charge(row), sp.charge(col));
  if (blk < 0) return {0.0, 0.0};
  return block(blk)(sp.local_index(row), sp.local_index(col));
}

Eigen::MatrixXcd DensityOperator::to_matrix() const {
  const auto& sp = space();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sp.dimension(), sp.dimension());
  for (int i = 0; i < static_cast<int>(layout_->blocks().size()); ++i) {
    const Block& b = layout_->blocks()[i];
    const auto rows = sp.sector(b.ket_charge);
    const auto cols = sp.sector(b.bra_charge);
    const auto data = block(i);
    for (int c = 0; c < b.cols; ++c) {
      for (int r = 0; r < b.rows; ++r) m(rows[r], cols[c]) = data(r, c);
    }
  }
  return m;
}

double DensityOperator::diagonal_sum(auto&& weight) const {
  const auto& sp = space();
  double sum = 0.0;
  for (int q = 0; q <= sp.max_charge(); ++q) {
    const int blk = layout_->find(q, q);
    if (blk < 0) continue;
    const auto data = block(blk);
    const auto members = sp.sector(q);
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
      sum += weight(sp.state(members[i])) * data(i, i).real();
    }
  }
  return sum;
}

Complex DensityOperator::trace() const {
  const auto& sp = space();
  Complex sum = 0.0;
  for (int q = 0; q <= sp.max_charge(); ++q) {
    const int blk = layout_->find(q, q);
    if (blk >= 0) sum += block(blk).trace();
  }
  return sum;
}

double DensityOperator::mean_occupation(Mode mode) const {
  return diagonal_sum([mode](const FockSpace::BasisState& s) { return mode == Mode::a ? s.n_a : s.n_b; });
}

double DensityOperator::spin_up_probability() const {
  if (!space().has_spin()) return 0.0;
  return diagonal_sum([](const FockSpace::BasisState& s) { return s.spin == Spin::up ? 1.0 : 0.0; });
}

double DensityOperator::level_population(Mode mode, int n) const {
  return diagonal_sum([mode, n](const FockSpace::BasisState& s) {
    return (mode == Mode::a ? s.n_a : s.n_b) == n ? 1.0 : 0.0;
  });
}

double DensityOperator::top_level_population(Mode mode) const {
  return level_population(mode, space().dim(mode) - 1);
}

double DensityOperator::hermiticity_defect() const {
  double worst = 0.0;
  const auto blocks = layout_->blocks();
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    const int mirror = layout_->find(blocks[i].bra_charge, blocks[i].ket_charge);
    if (mirror < 0) {
      worst = std::max(worst, block(i).cwiseAbs().maxCoeff());
      continue;
    }
    worst = std::max(worst, (block(i) - block(mirror).adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double DensityOperator::min_eigenvalue() const {
  const auto& sp = space();
  const int n_charges = sp.max_charge() + 1;
  std::vector<int> parent(n_charges);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Block& b : layout_->blocks()) parent[find_root(parent, b.ket_charge)] = find_root(parent, b.bra_charge);

  std::vector<std::vector<int>> groups(n_charges);
  for (int q = 0; q < n_charges; ++q) {
    for (int i : sp.sector(q)) groups[find_root(parent, q)].push_back(i);
  }

  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& members : groups) {
    if (members.empty()) continue;
    const int n = static_cast<int>(members.size());
    Eigen::MatrixXcd m(n, n);
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) m(r, c) = (*this)(members[r], members[c]);
    }
    const Eigen::MatrixXcd hermitian = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    lowest = std::min(lowest, solver.eigenvalues().minCoeff());
  }
  return lowest;
}

DensityOperator DensityOperator::conjugated(std::span<const SparseComplexMatrix> unitary) const {
  if (static_cast<int>(unitary.size()) != space().max_charge() + 1) {
    throw DomainError("need one sector unitary per charge");
  }
  DensityOperator out(layout_);
  for (int i = 0; i < static_cast<int>(layout_->blocks().size()); ++i) {
    const Block& b = layout_->blocks()[i];
    const Eigen::MatrixXcd left = unitary[b.ket_charge] * block(i);
    out.block(i).noalias() = left * unitary[b.bra_charge].adjoint();
  }
  return out;
}

DensityOperator DensityOperator::depolarize_spin(double p) const {
  const auto& sp = space();
  if (!sp.has_spin()) throw DomainError("depolarizing requires a spin factor");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("depolarizing strength must lie in [0, 1]");

  DensityOperator out(layout_);
  for (int i = 0; i < static_cast<int>(layout_->blocks().size()); ++i) {
    const Block& b = layout_->blocks()[i];
    const auto rows = sp.sector(b.ket_charge);
    const auto cols = sp.sector(b.bra_charge);
    const auto src = block(i);
    auto dst = out.block(i);
    for (int c = 0; c < b.cols; ++c) {
      const auto sc = sp.state(cols[c]);
      for (int r = 0; r < b.rows; ++r) {
        const auto sr = sp.state(rows[r]);
        Complex v = (1.0 - p) * src(r, c);
        if (sr.spin == sc.spin) {
          const Complex spin_trace = (*this)(sp.index(Spin::down, sr.n_a, sr.n_b), sp.index(Spin::down, sc.n_a, sc.n_b)) +
                                     (*this)(sp.index(Spin::up, sr.n_a, sr.n_b), sp.index(Spin::up, sc.n_a, sc.n_b));
          v += 0.5 * p * spin_trace;
        }
        dst(r, c) = v;
      }
    }
  }
  return out;
}

DensityOperator& DensityOperator::operator*=(double s) {
  for (Complex& v : data_) v *= s;
  return *this;
}

void DensityOperator::write_csv(std::ostream& out) const {
  const auto& sp = space();
  if (sp.has_spin()) {
    out << "# basis=spin,motion_a,motion_b order=row-major dims=2," << sp.dim_a() << ',' << sp.dim_b() << '\n';
  } else {
    out << "# basis=motion_a,motion_b order=row-major dims=" << sp.dim_a() << ',' << sp.dim_b() << '\n';
  }
  char buf[64];
  for (int r = 0; r < sp.dimension(); ++r) {
    for (int c = 0; c < sp.dimension(); ++c) {
      const Complex v = (*this)(r, c);
      std::snprintf(buf, sizeof buf, "%s%.17g,%.17g", c == 0 ? "" : ",", v.real(), v.imag());
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace cw
