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

#include <cstdint>
#include <memory>
#include <vector>

#include "mcsm/spreading.hpp"
#include "mcsm/types.hpp"

namespace mcsm::ofdm {

struct OfdmConfig {
  int n = 2048;       // IDFT length
  int n_cp = 144;     // cyclic prefix samples
  int n_sc = 20;      // allocated subcarriers per block
  double sample_rate_hz = 26e6;
  int hop_interval = 10;  // OFDM symbols per hop
  std::uint64_t hop_pattern_seed = 1;

  double sample_period_s() const { return 1.0 / sample_rate_hz; }
  double subcarrier_spacing_hz() const { return sample_rate_hz / n; }
  double occupied_bandwidth_hz() const { return n_sc * subcarrier_spacing_hz(); }
  double core_symbol_time_s() const { return n / sample_rate_hz; }
  double cp_time_s() const { return n_cp / sample_rate_hz; }
  double symbol_time_s() const { return (n + n_cp) / sample_rate_hz; }
  int symbol_samples() const { return n + n_cp; }
  /// How many disjoint contiguous blocks of n_sc subcarriers fit in the band.
  int max_usable_blocks() const { return n / n_sc; }

  void validate() const;
};

/// Per-hop-interval placement of the contiguous n_sc-subcarrier block.
struct SubcarrierAllocation {
  int n_sc = 0;
  int hop_interval = 1;
  std::vector<int> block_start;  // first subcarrier index, one per hop

  int n_hops() const { return static_cast<int>(block_start.size()); }
  int hop_of_symbol(int symbol) const { return symbol / hop_interval; }
  int start_of_symbol(int symbol) const { return block_start.at(hop_of_symbol(symbol)); }
  /// Strictly increasing contiguous indices for one hop.
  std::vector<int> indices(int hop) const;
  /// Center subcarrier of one hop's block (used by frequency-selective
  /// channel presets).
  int center_subcarrier(int hop) const { return block_start.at(hop) + n_sc / 2; }
};

/// Deterministic pseudo-random hop schedule covering
/// ceil(n_symbols / hop_interval) hop intervals, drawn from
/// cfg.hop_pattern_seed over `usable_blocks` contiguous block positions.
SubcarrierAllocation hop_schedule(int n_symbols, const OfdmConfig& cfg,
                                  int usable_blocks);

/// Place an n_sc block onto the full carrier grid (zero elsewhere).
CVec subcarrier_map(const Eigen::Ref<const CVec>& freq_block, int block_start, int n);

/// Extract an n_sc block from the full carrier grid.
CVec subcarrier_demap(const Eigen::Ref<const CVec>& freq_full, int block_start, int n_sc);

/// Unitary FFT pair of fixed length with cyclic prefix handling. One
/// instance per thread; the transforms are FFTW-backed and an instance is
/// not safe for concurrent use.
class OfdmModem {
 public:
  explicit OfdmModem(const OfdmConfig& cfg);
  ~OfdmModem();
  OfdmModem(const OfdmModem&) = delete;
  OfdmModem& operator=(const OfdmModem&) = delete;

  /// freq (length n) -> time (length n + n_cp): unitary IDFT, last n_cp
  /// samples copied in front.
  CSeq modulate(const CSeq& freq_full) const;
  /// time (length n + n_cp) -> freq (length n): CP dropped, unitary DFT.
  CSeq demodulate(const CSeq& time_symbol) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot conveniences (plan setup per call); use OfdmModem in loops.
CSeq ofdm_modulate(const CSeq& freq_full, const OfdmConfig& cfg);
CSeq ofdm_demodulate(const CSeq& time_symbol, const OfdmConfig& cfg);

/// A full frame of time-domain samples, n_symbols * (n + n_cp) long.
struct TimeFrame {
  CSeq samples;
  int n_symbols = 0;
  int symbol_samples = 0;
};

/// Transmit-side frame assembly: per OFDM symbol, sum the active nodes'
/// spread symbols, map onto the hop's subcarriers, OFDM-modulate and
/// concatenate. Inactive nodes contribute exactly zero.
TimeFrame assemble_frame(const std::vector<CSeq>& per_node_diff_symbols,
                         const spread::SpreadingSet& spreading,
                         const std::vector<std::uint8_t>& activity,
                         const SubcarrierAllocation& schedule,
                         const OfdmConfig& cfg);

}  // namespace mcsm::ofdm
