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

#include <cstddef>
#include <utility>

#include "mcsm/types.hpp"

namespace mcsm::fec {

enum class Termination {
  terminated_with_tail_bits,  // append constraint_length-1 zero bits
  truncated,
};

/// Rate-1/2 convolutional code. Generators are octal tap masks with the
/// newest register bit in the highest tap position: octal 5 = taps (1,0,1),
/// octal 7 = taps (1,1,1) for constraint length 3.
struct CodeConfig {
  std::pair<unsigned, unsigned> generators{05, 07};
  unsigned constraint_length = 3;
  Termination termination = Termination::terminated_with_tail_bits;

  unsigned memory() const { return constraint_length - 1; }
  std::size_t tail_bits() const {
    return termination == Termination::terminated_with_tail_bits ? memory() : 0;
  }
  /// Coded length for n_info information bits (rate 1/2).
  std::size_t coded_length(std::size_t n_info) const {
    return 2 * (n_info + tail_bits());
  }
  /// Throws std::invalid_argument on nonzero-generator / constraint-length
  /// violations.
  void validate() const;
};

/// One node's bit-domain frame content.
struct BitFrame {
  Bits info_bits;
  Bits coded_bits;
};

/// Shift-register convolution of u with both generators, outputs interleaved
/// g1,g2 per input bit. Terminated mode appends memory() zero tail bits.
Bits encode(const Bits& u, const CodeConfig& cfg);

/// Maximum-likelihood (minimum Hamming distance) hard-decision decoding.
/// Deterministic tie rule: among equal-metric codewords the lexicographically
/// smallest information sequence wins (0 sorts before 1, leftmost bit most
/// significant).
Bits viterbi_decode(const Bits& c_hat, const CodeConfig& cfg);

}  // namespace mcsm::fec
