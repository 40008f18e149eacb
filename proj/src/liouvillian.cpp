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

#include "liouvillian.hpp"

#include <algorithm>
#include <cmath>

namespace cw::detail {
namespace {

constexpr Complex kI(0.0, 1.0);

}  // namespace

Liouvillian::Liouvillian(const BlockLayout& layout, const ExchangeHamiltonian& h, const HeatingModel& heating)
    : layout_(layout) {
  const FockSpace& space = layout.space();
  const int dim_a = space.dim_a();
  const int dim_b = space.dim_b();
  const double half_delta = 0.5 * h.detuning.value();
  const double omega = h.omega_ex.value();
  const double rate_a = heating.ndot_a.value();
  const double rate_b = heating.ndot_b.value();
  rates_ = {rate_a, rate_b, rate_a, rate_b};

  // Chains first; ladders need the neighbouring sectors' chains.
  struct ChainShape {
    int motional_charge;
    int na_min;
  };
  std::vector<std::array<ChainShape, 2>> shapes(space.max_charge() + 1);

  sectors_.resize(space.max_charge() + 1);
  for (int q = 0; q <= space.max_charge(); ++q) {
    Sector& sector = sectors_[q];
    const auto members = space.sector(q);
    for (int i = 0; i < static_cast<int>(members.size());) {
      const auto first = space.state(members[i]);
      int len = 1;
      while (i + len < static_cast<int>(members.size()) && space.state(members[i + len]).spin == first.spin) ++len;

      Chain chain;
      chain.offset = i;
      chain.length = len;
      chain.diag.resize(len);
      chain.hop.resize(std::max(0, len - 1));
      for (int r = 0; r < len; ++r) {
        const int na = first.n_a + r;
        const int nb = first.n_b - r;
        // L^dag L summed over both jumps of a mode, truncated: n + (n + 1)[n < top]
        const double decay = rate_a * (na + (na + 1 < dim_a ? na + 1 : 0)) + rate_b * (nb + (nb + 1 < dim_b ? nb + 1 : 0));
        chain.diag[r] = -kI * (half_delta * (na - nb)) - 0.5 * decay;
        if (r + 1 < len) chain.hop[r] = -kI * (omega * std::sqrt(static_cast<double>((na + 1) * nb)));
      }
      const int spin = static_cast<int>(first.spin);
      sector.chain_index[spin] = static_cast<int>(sector.chains.size());
      shapes[q][spin] = {first.n_a + first.n_b, first.n_a};
      sector.chains.push_back(std::move(chain));
      i += len;
    }
  }

  for (int q = 0; q <= space.max_charge(); ++q) {
    for (int spin = 0; spin < 2; ++spin) {
      const int ci = sectors_[q].chain_index[spin];
      if (ci < 0) continue;
      Chain& chain = sectors_[q].chains[ci];
      const auto [m, na_min] = shapes[q][spin];

      auto image = [&](int q_image) -> const Chain* {
        if (q_image < 0 || q_image > space.max_charge()) return nullptr;
        const int idx = sectors_[q_image].chain_index[spin];
        return idx < 0 ? nullptr : &sectors_[q_image].chains[idx];
      };
      auto fill = [&](Jump j, int q_image, int na_shift, int begin, int end, auto&& factor) {
        Ladder& ladder = chain.ladder[j];
        const Chain* target = image(q_image);
        begin = std::max(begin, 0);
        end = std::min(end, chain.length);
        if (target == nullptr || begin >= end) return;
        const int image_na_min = shapes[q_image][spin].na_min;
        ladder.begin = begin;
        ladder.end = end;
        ladder.shift = target->offset + na_min + na_shift - image_na_min;
        ladder.factor.assign(chain.length, 0.0);
        for (int r = begin; r < end; ++r) ladder.factor[r] = factor(na_min + r, m - na_min - r);
      };

      // a rho a^dag: n_a + 1 must stay below dim_a
      fill(kRaiseA, q + 1, 1, 0, dim_a - 1 - na_min, [](int na, int) { return std::sqrt(na + 1.0); });
      // b rho b^dag: n_b + 1 < dim_b
      fill(kRaiseB, q + 1, 0, m - dim_b + 2 - na_min, chain.length, [](int, int nb) { return std::sqrt(nb + 1.0); });
      // a^dag rho a: n_a >= 1
      fill(kLowerA, q - 1, -1, 1 - na_min, chain.length, [](int na, int) { return std::sqrt(static_cast<double>(na)); });
      // b^dag rho b: n_b >= 1
      fill(kLowerB, q - 1, 0, 0, m - na_min, [](int, int nb) { return std::sqrt(static_cast<double>(nb)); });
    }
  }

  const auto blocks = layout.blocks();
  plans_.resize(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    plans_[i].raise_source = layout.find(blocks[i].ket_charge + 1, blocks[i].bra_charge + 1);
    plans_[i].lower_source = layout.find(blocks[i].ket_charge - 1, blocks[i].bra_charge - 1);
  }
}

void Liouvillian::apply(std::span<const Complex> rho, std::span<Complex> out) const {
  const auto blocks = layout_.blocks();

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& b = blocks[bi];
    const Complex* src_block = rho.data() + b.offset;
    Complex* dst_block = out.data() + b.offset;
    const int ld = b.rows;
    const Sector& ket = sectors_[b.ket_charge];
    const Sector& bra = sectors_[b.bra_charge];

    for (const Chain& row : ket.chains) {
      for (const Chain& col : bra.chains) {
        const int n = row.length;
        const Complex* rd = row.diag.data();
        const Complex* rh = row.hop.data();

        for (int c = 0; c < col.length; ++c) {
          const Complex* s = src_block + static_cast<std::size_t>(col.offset + c) * ld + row.offset;
          Complex* d = dst_block + static_cast<std::size_t>(col.offset + c) * ld + row.offset;
          const Complex bra_diag = std::conj(col.diag[c]);
          // - rho (-iH) couples neighbouring columns of the bra chain
          const Complex hp = c > 0 ? col.hop[c - 1] : Complex(0.0, 0.0);
          const Complex hn = c + 1 < col.length ? col.hop[c] : Complex(0.0, 0.0);
          const Complex* sp = c > 0 ? s - ld : s;
          const Complex* sn = c + 1 < col.length ? s + ld : s;
          // (-iH) rho couples neighbouring rows of the ket chain
          for (int r = 0; r < n; ++r) {
            Complex v = (rd[r] + bra_diag) * s[r] - hp * sp[r] - hn * sn[r];
            if (r > 0) v += rh[r - 1] * s[r - 1];
            if (r + 1 < n) v += rh[r] * s[r + 1];
            d[r] = v;
          }
        }

        auto add_jump = [&](int source, Jump j) {
          const double rate = rates_[j];
          const Ladder& lr = row.ladder[j];
          const Ladder& lc = col.ladder[j];
          if (source < 0 || rate == 0.0 || lr.begin >= lr.end || lc.begin >= lc.end) return;
          const Block& sb = blocks[source];
          const Complex* src = rho.data() + sb.offset;
          const double* fr = lr.factor.data();
          for (int c = lc.begin; c < lc.end; ++c) {
            const double fc = rate * lc.factor[c];
            const Complex* s = src + static_cast<std::size_t>(c + lc.shift) * sb.rows + lr.shift;
            Complex* d = dst_block + static_cast<std::size_t>(col.offset + c) * ld + row.offset;
            for (int r = lr.begin; r < lr.end; ++r) d[r] += (fc * fr[r]) * s[r];
          }
        };
        add_jump(plans_[bi].raise_source, kRaiseA);
        add_jump(plans_[bi].raise_source, kRaiseB);
        add_jump(plans_[bi].lower_source, kLowerA);
        add_jump(plans_[bi].lower_source, kLowerB);
      }
    }
  }
}

}  // namespace cw::detail
