// Copyright 2026 the mcsm-sim authors
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

#include "mcsm/fec.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace mcsm::fec {

namespace {

inline std::uint8_t parity(unsigned x) {
  return static_cast<std::uint8_t>(std::popcount(x) & 1u);
}

void check_bits(const Bits& b, const char* what) {
  for (const auto v : b) {
    if (v > 1) throw std::invalid_argument(std::string(what) + ": bits must be 0 or 1");
  }
}

}  // namespace

void CodeConfig::validate() const {
  if (constraint_length < 2) {
    throw std::invalid_argument("fec: constraint_length must be >= 2");
  }
  if (constraint_length > 16) {
    throw std::invalid_argument("fec: constraint_length too large");
  }
  if (generators.first == 0 || generators.second == 0) {
    throw std::invalid_argument("fec: generators must be nonzero");
  }
  const unsigned mask = (1u << constraint_length) - 1u;
  if ((generators.first & ~mask) != 0 || (generators.second & ~mask) != 0) {
    throw std::invalid_argument("fec: generator taps exceed constraint length");
  }
}

Bits encode(const Bits& u, const CodeConfig& cfg) {
  cfg.validate();
  if (u.empty()) throw std::invalid_argument("fec::encode: empty input");
  check_bits(u, "fec::encode");

  const unsigned k = cfg.constraint_length;
  const unsigned mask = (1u << k) - 1u;
  const unsigned g1 = cfg.generators.first;
  const unsigned g2 = cfg.generators.second;

  Bits out;
  out.reserve(cfg.coded_length(u.size()));

  // Register layout: bit (k-1) holds the newest input, bit 0 the oldest.
  unsigned reg = 0;
  auto step = [&](std::uint8_t b) {
    reg = ((reg >> 1) | (static_cast<unsigned>(b) << (k - 1))) & mask;
    out.push_back(parity(reg & g1));
    out.push_back(parity(reg & g2));
  };

  for (const auto b : u) step(b);
  for (std::size_t i = 0; i < cfg.tail_bits(); ++i) step(0);
  return out;
}

Bits viterbi_decode(const Bits& c_hat, const CodeConfig& cfg) {
  cfg.validate();
  check_bits(c_hat, "fec::viterbi_decode");
  if (c_hat.empty() || c_hat.size() % 2 != 0) {
    throw std::invalid_argument("fec::viterbi_decode: coded length must be even and nonzero");
  }

  const unsigned m = cfg.memory();
  const unsigned n_states = 1u << m;
  const std::size_t n_steps = c_hat.size() / 2;
  const bool terminated = cfg.termination == Termination::terminated_with_tail_bits;
  if (terminated && n_steps <= m) {
    throw std::invalid_argument("fec::viterbi_decode: too short for terminated code");
  }

  const unsigned g1 = cfg.generators.first;
  const unsigned g2 = cfg.generators.second;

  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> metric(n_states, kInf), next_metric(n_states);
  // Survivor info-bit prefixes per state. Kept materialized so that metric
  // ties can be resolved by lexicographic comparison of the decoded
  // sequences, matching the brute-force nearest-codeword rule exactly.
  std::vector<Bits> surv(n_states), next_surv(n_states);
  metric[0] = 0;  // encoder starts in the all-zeros state
  for (auto& s : surv) s.reserve(n_steps);
  for (auto& s : next_surv) s.reserve(n_steps);

  for (std::size_t t = 0; t < n_steps; ++t) {
    const std::uint8_t r1 = c_hat[2 * t];
    const std::uint8_t r2 = c_hat[2 * t + 1];
    const bool tail_step = terminated && t >= n_steps - m;

    std::fill(next_metric.begin(), next_metric.end(), kInf);
    for (auto& s : next_surv) s.clear();

    for (unsigned s = 0; s < n_states; ++s) {
      if (metric[s] >= kInf) continue;
      const unsigned max_bit = tail_step ? 0u : 1u;
      for (unsigned b = 0; b <= max_bit; ++b) {
        const unsigned reg = (b << m) | s;
        const int d = (parity(reg & g1) != r1) + (parity(reg & g2) != r2);
        const int cand = metric[s] + d;
        const unsigned ns = (m == 0) ? 0 : ((s >> 1) | (b << (m - 1)));
        if (cand < next_metric[ns]) {
          next_metric[ns] = cand;
          next_surv[ns] = surv[s];
          next_surv[ns].push_back(static_cast<std::uint8_t>(b));
        } else if (cand == next_metric[ns]) {
          // The appended bit is identical for every transition into ns,
          // so comparing the prefixes decides the lexicographic order of
          // the full sequences.
          if (std::memcmp(surv[s].data(), next_surv[ns].data(), t) < 0) {
            next_surv[ns] = surv[s];
            next_surv[ns].push_back(static_cast<std::uint8_t>(b));
          }
        }
      }
    }
    metric.swap(next_metric);
    surv.swap(next_surv);
  }

  unsigned best = 0;
  if (terminated) {
    best = 0;  // tail bits drive the encoder back to state 0
  } else {
    for (unsigned s = 1; s < n_states; ++s) {
      if (metric[s] < metric[best]) {
        best = s;
      } else if (metric[s] == metric[best] &&
                 std::lexicographical_compare(surv[s].begin(), surv[s].end(),
                                              surv[best].begin(), surv[best].end())) {
        best = s;
      }
    }
  }

  Bits u = std::move(surv[best]);
  u.resize(u.size() - cfg.tail_bits());  // strip forced tail inputs
  return u;
}

}  // namespace mcsm::fec
