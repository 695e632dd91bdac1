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

#include "mcsm/dpsk.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcsm::dpsk {

namespace {

constexpr double kUnitTol = 1e-9;

unsigned gray_encode(unsigned n) { return n ^ (n >> 1); }

unsigned gray_decode(unsigned g) {
  unsigned n = g;
  for (unsigned shift = 1; shift < 8 * sizeof(unsigned); shift <<= 1) {
    n ^= n >> shift;
  }
  return n;
}

}  // namespace

void PskConfig::validate() const {
  if (M < 2 || !std::has_single_bit(M)) {
    throw std::invalid_argument("dpsk: M must be a power of 2 and >= 2");
  }
}

unsigned PskConfig::bits_per_symbol() const {
  return static_cast<unsigned>(std::countr_zero(M));
}

cdouble PskConfig::point(unsigned index) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(index) /
                             static_cast<double>(M));
}

CSeq map_psk(const Bits& bits, const PskConfig& cfg) {
  cfg.validate();
  const unsigned bps = cfg.bits_per_symbol();
  if (bits.size() % bps != 0) {
    throw std::invalid_argument("dpsk::map_psk: bit count not divisible by log2(M)");
  }
  CSeq out;
  out.reserve(bits.size() / bps);
  for (std::size_t i = 0; i < bits.size(); i += bps) {
    unsigned n = 0;
    for (unsigned j = 0; j < bps; ++j) {
      const auto b = bits[i + j];
      if (b > 1) throw std::invalid_argument("dpsk::map_psk: bits must be 0 or 1");
      n = (n << 1) | b;
    }
    out.push_back(cfg.point(gray_encode(n)));
  }
  return out;
}

Bits demap_psk(const CSeq& a_hat, const PskConfig& cfg) {
  cfg.validate();
  if (a_hat.empty()) throw std::invalid_argument("dpsk::demap_psk: empty input");
  const unsigned bps = cfg.bits_per_symbol();
  Bits out;
  out.reserve(a_hat.size() * bps);
  for (const auto& a : a_hat) {
    unsigned best = 0;
    double best_d = std::norm(a - cfg.point(0));
    for (unsigned p = 1; p < cfg.M; ++p) {
      const double d = std::norm(a - cfg.point(p));
      if (d < best_d) {
        best_d = d;
        best = p;
      }
    }
    const unsigned n = gray_decode(best);
    for (unsigned j = bps; j-- > 0;) {
      out.push_back(static_cast<std::uint8_t>((n >> j) & 1u));
    }
  }
  return out;
}

CSeq diff_modulate(const CSeq& a) {
  for (const auto& s : a) {
    if (std::abs(std::abs(s) - 1.0) > kUnitTol) {
      throw std::invalid_argument("dpsk::diff_modulate: symbols must have unit magnitude");
    }
  }
  CSeq b(a.size() + 1);
  b[0] = {1.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) b[i + 1] = a[i] * b[i];
  return b;
}

CSeq diff_demodulate(const CSeq& b_hat) {
  if (b_hat.size() < 2) {
    throw std::invalid_argument("dpsk::diff_demodulate: need at least 2 symbols");
  }
  CSeq a(b_hat.size() - 1);
  for (std::size_t i = 1; i < b_hat.size(); ++i) {
    a[i - 1] = b_hat[i] * std::conj(b_hat[i - 1]);
  }
  return a;
}

}  // namespace mcsm::dpsk
