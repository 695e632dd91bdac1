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

#include <vector>

#include "mcsm/dpsk.hpp"
#include "mcsm/fec.hpp"
#include "mcsm/types.hpp"

namespace mcsm::framing {

/// How the frame symbol budget is computed.
///
/// self_consistent: terminated code, the differential reference b(0)=1 is
/// transmitted as the first OFDM symbol. 150 info bits -> 153 OFDM symbols.
///
/// paper_exact: truncated code and no transmitted reference (the receiver
/// anchors the first differential decision on an assumed-ideal b(0)=1).
/// 150 info bits -> exactly 150 OFDM symbols; useful for frame-arithmetic
/// cross-checks and ideal-channel runs, unreliable on unknown channels.
enum class Profile { self_consistent, paper_exact };

/// Where differential references sit relative to hop boundaries.
///
/// spanning: one reference at frame start; decisions run straight across hop
/// boundaries (the boundary decision sees h_new * conj(h_old)).
///
/// per_hop: every hop interval starts with its own reference symbol, at the
/// cost of one data symbol per hop.
enum class DiffReference { spanning, per_hop };

struct FrameConfig {
  Profile profile = Profile::self_consistent;
  DiffReference diff_reference = DiffReference::spanning;
  int n_info_bits = 150;
};

struct FrameGeometry {
  Profile profile;
  DiffReference diff_reference;
  int n_info_bits = 0;
  int n_coded_bits = 0;
  int n_psk_symbols = 0;  // L
  int n_symbols = 0;      // N_B, OFDM symbols actually transmitted
  int hop_interval = 0;
  int n_hops = 0;

  /// Hop segment lengths in symbols (sums to n_symbols).
  std::vector<int> hop_segments() const;
};

/// Resolve the symbol budget. Throws std::invalid_argument if the code
/// termination contradicts the profile, the coded length does not divide
/// into PSK symbols, or paper_exact is combined with per_hop references.
FrameGeometry compute_geometry(const FrameConfig& frame, const fec::CodeConfig& code,
                               const dpsk::PskConfig& psk, int hop_interval);

/// Full node transmit chain of one active node: encode, Gray-map,
/// differentially modulate, lay out references per the geometry. Returns the
/// n_symbols-long differential symbol stream that gets spread onto the
/// subcarrier block.
CSeq build_node_symbols(const Bits& info_bits, const fec::CodeConfig& code,
                        const dpsk::PskConfig& psk, const FrameGeometry& geo);

}  // namespace mcsm::framing
