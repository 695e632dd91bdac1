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

#pragma once

#include "mcsm/types.hpp"

namespace mcsm::dpsk {

/// M-PSK alphabet with Gray bit labels. Constellation point p (0 <= p < M)
/// sits at angle 2*pi*p/M; the bit group mapped onto it is the one whose
/// binary value n satisfies n ^ (n >> 1) == p. For M = 4 this gives
/// 00->1, 01->+j, 11->-1, 10->-j.
struct PskConfig {
  unsigned M = 4;

  unsigned bits_per_symbol() const;
  cdouble point(unsigned index) const;
  void validate() const;
};

/// Gray-map a bit sequence (MSB-first groups) to PSK symbols.
CSeq map_psk(const Bits& bits, const PskConfig& cfg);

/// Nearest-point (Euclidean) hard decisions back to bit labels. Ties go to
/// the smallest constellation index.
Bits demap_psk(const CSeq& a_hat, const PskConfig& cfg);

/// Differential modulation b(0) = 1, b(i) = a(i) * b(i-1); output has one
/// more symbol than the input.
CSeq diff_modulate(const CSeq& a);

/// Differential demodulation a_hat(i) = b_hat(i) * conj(b_hat(i-1)).
/// No normalization is applied; hard decisions happen at demapping.
CSeq diff_demodulate(const CSeq& b_hat);

/// Modulation-domain frame content of one node: PSK symbols a and the
/// differential stream b (length |a|+1 including the b(0) = 1 reference).
struct SymbolFrame {
  CSeq psk_symbols;
  CSeq diff_symbols;
};

}  // namespace mcsm::dpsk
