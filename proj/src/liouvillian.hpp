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

#include <array>
#include <span>
#include <vector>

#include "coupled_wells/density_operator.hpp"
#include "coupled_wells/dynamics.hpp"

namespace cw::detail {

/// Matrix-free master-equation generator on a BlockLayout:
///   d rho/dt = -i [H, rho] + sum_k L_k rho L_k^dag - 1/2 {L_k^dag L_k, rho}
/// with L = sqrt(ndot) a, sqrt(ndot) a^dag for each mode. Jump operators
/// are the truncated ladder operators, so the generator is exactly trace
/// preserving on the truncated space.
///
/// A charge sector splits into one chain per spin value. Along a chain n_a
/// rises by one and n_b falls by one per step, so the beam-splitter term is
/// tridiagonal and each ladder operator maps a contiguous range of the chain
/// onto a shifted range of a chain in the neighbouring sector.
class Liouvillian {
 public:
  Liouvillian(const BlockLayout& layout, const ExchangeHamiltonian& h, const HeatingModel& heating);

  void apply(std::span<const Complex> rho, std::span<Complex> out) const;

 private:
  enum Jump { kRaiseA, kRaiseB, kLowerA, kLowerB, kJumpCount };

  // Local index r of this chain maps to r + shift of the image chain, for r
  // in [begin, end), with matrix element factor[r].
  struct Ladder {
    int begin = 0;
    int end = 0;
    int shift = 0;
    std::vector<double> factor;
  };

  struct Chain {
    int offset = 0;  // first local index within the sector
    int length = 0;
    std::vector<Complex> diag;  // -i h_r - D_r / 2
    std::vector<Complex> hop;   // -i <r+1|H|r>, length - 1 entries
    std::array<Ladder, kJumpCount> ladder;
  };

  // chain_index[spin] into chains, or -1
  struct Sector {
    std::vector<Chain> chains;
    std::array<int, 2> chain_index{-1, -1};
  };

  struct BlockPlan {
    int raise_source = -1;  // block (Q+1, Q'+1)
    int lower_source = -1;  // block (Q-1, Q'-1)
  };

  const BlockLayout& layout_;
  std::array<double, kJumpCount> rates_{};
  std::vector<Sector> sectors_;
  std::vector<BlockPlan> plans_;
};

}  // namespace cw::detail
