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

#include "coupled_wells/fock_space.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "coupled_wells/errors.hpp"

namespace cw {

FockSpace::FockSpace(int dim_a, int dim_b, bool spin_a) : dim_a_(dim_a), dim_b_(dim_b), spin_a_(spin_a) {
  if (dim_a < 2 || dim_b < 2) throw DomainError("Fock dimensions must be at least 2");

  auto sectors = std::make_shared<Sectors>();
  sectors->members.resize(max_charge() + 1);
  sectors->local.resize(dimension());
  for (int i = 0; i < dimension(); ++i) {
    auto& members = sectors->members[charge(i)];
    sectors->local[i] = static_cast<int>(members.size());
    members.push_back(i);
  }
  sectors_ = std::move(sectors);
}

FockSpace::BasisState FockSpace::state(int index) const {
  const int n_b = index % dim_b_;
  const int rest = index / dim_b_;
  return {static_cast<Spin>(rest / dim_a_), rest % dim_a_, n_b};
}

int FockSpace::charge(int index) const {
  const auto s = state(index);
  return s.n_a + s.n_b + (spin_a_ && s.spin == Spin::down ? 1 : 0);
}

std::span<const int> FockSpace::sector(int charge) const {
  if (charge < 0 || charge > max_charge()) return {};
  return sectors_->members[charge];
}

int FockSpace::required_dimension(double nbar, double tail_tol) {
  if (!(nbar >= 0.0)) throw DomainError("mean occupation must be non-negative");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw DomainError("tail tolerance must lie in (0, 1)");
  if (nbar == 0.0) return 2;

  // p_n = (1 - x) x^n / (1 - x^N) on n = 0..N-1, x = nbar / (1 + nbar).
  const double x = nbar / (1.0 + nbar);
  const double log_x = std::log(x);
  for (int n = 2; n < 1'000'000; ++n) {
    const double top = std::exp(std::log1p(-x) + (n - 1) * log_x) / -std::expm1(n * log_x);
    if (top < tail_tol) return n;
  }
  throw DomainError("mean occupation " + std::to_string(nbar) + " needs an impractically large truncation");
}

}  // namespace cw
