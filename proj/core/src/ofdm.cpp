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

#include "mcsm/ofdm.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

#include "mcsm/rng.hpp"

namespace mcsm::ofdm {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex g_fftw_plan_mutex;
}  // namespace

void OfdmConfig::validate() const {
  if (n < 1) throw std::invalid_argument("ofdm: N must be >= 1");
  if (n_cp < 0 || n_cp >= n) throw std::invalid_argument("ofdm: need 0 <= N_CP < N");
  if (n_sc < 1 || n_sc > n) throw std::invalid_argument("ofdm: need 1 <= N_SC <= N");
  if (sample_rate_hz <= 0) throw std::invalid_argument("ofdm: sample rate must be positive");
  if (hop_interval < 1) throw std::invalid_argument("ofdm: hop interval must be >= 1");
}

std::vector<int> SubcarrierAllocation::indices(int hop) const {
  std::vector<int> idx(n_sc);
  const int start = block_start.at(hop);
  for (int i = 0; i < n_sc; ++i) idx[i] = start + i;
  return idx;
}

SubcarrierAllocation hop_schedule(int n_symbols, const OfdmConfig& cfg,
                                  int usable_blocks) {
  cfg.validate();
  if (usable_blocks < 1) throw std::invalid_argument("ofdm: usable_blocks must be >= 1");
  if (usable_blocks > cfg.max_usable_blocks()) {
    throw std::invalid_argument("ofdm: usable_blocks exceeds carrier grid");
  }
  if (n_symbols < 1) throw std::invalid_argument("ofdm: n_symbols must be >= 1");

  const int n_hops = (n_symbols + cfg.hop_interval - 1) / cfg.hop_interval;
  SubcarrierAllocation alloc;
  alloc.n_sc = cfg.n_sc;
  alloc.hop_interval = cfg.hop_interval;
  alloc.block_start.resize(n_hops);
  Rng rng(derive_seed(cfg.hop_pattern_seed, 0x40Fu));
  for (int h = 0; h < n_hops; ++h) {
    const int block = static_cast<int>(rng.uniform_int(usable_blocks));
    alloc.block_start[h] = block * cfg.n_sc;
  }
  return alloc;
}

CVec subcarrier_map(const Eigen::Ref<const CVec>& freq_block, int block_start, int n) {
  if (block_start < 0 || block_start + freq_block.size() > n) {
    throw std::invalid_argument("ofdm::subcarrier_map: allocation out of range");
  }
  CVec full = CVec::Zero(n);
  full.segment(block_start, freq_block.size()) = freq_block;
  return full;
}

CVec subcarrier_demap(const Eigen::Ref<const CVec>& freq_full, int block_start, int n_sc) {
  if (block_start < 0 || block_start + n_sc > freq_full.size()) {
    throw std::invalid_argument("ofdm::subcarrier_demap: allocation out of range");
  }
  return freq_full.segment(block_start, n_sc);
}

struct OfdmModem::Impl {
  int n;
  int n_cp;
  double scale;
  fftw_complex* buf_in;
  fftw_complex* buf_out;
  fftw_plan fwd;   // time -> freq, FFTW_FORWARD
  fftw_plan inv;   // freq -> time, FFTW_BACKWARD

  Impl(int n_, int n_cp_) : n(n_), n_cp(n_cp_), scale(1.0 / std::sqrt(double(n_))) {
    std::lock_guard<std::mutex> lock(g_fftw_plan_mutex);
    buf_in = fftw_alloc_complex(n);
    buf_out = fftw_alloc_complex(n);
    fwd = fftw_plan_dft_1d(n, buf_in, buf_out, FFTW_FORWARD, FFTW_ESTIMATE);
    inv = fftw_plan_dft_1d(n, buf_in, buf_out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Impl() {
    std::lock_guard<std::mutex> lock(g_fftw_plan_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(inv);
    fftw_free(buf_in);
    fftw_free(buf_out);
  }
};

OfdmModem::OfdmModem(const OfdmConfig& cfg) {
  cfg.validate();
  impl_ = std::make_unique<Impl>(cfg.n, cfg.n_cp);
}

OfdmModem::~OfdmModem() = default;

CSeq OfdmModem::modulate(const CSeq& freq_full) const {
  const int n = impl_->n;
  const int n_cp = impl_->n_cp;
  if (static_cast<int>(freq_full.size()) != n) {
    throw std::invalid_argument("ofdm::modulate: frequency vector must have length N");
  }
  for (int i = 0; i < n; ++i) {
    impl_->buf_in[i][0] = freq_full[i].real();
    impl_->buf_in[i][1] = freq_full[i].imag();
  }
  fftw_execute(impl_->inv);
  CSeq out(n + n_cp);
  for (int i = 0; i < n; ++i) {
    out[n_cp + i] = impl_->scale * cdouble(impl_->buf_out[i][0], impl_->buf_out[i][1]);
  }
  for (int i = 0; i < n_cp; ++i) out[i] = out[n + i];  // CP = tail copy
  return out;
}

CSeq OfdmModem::demodulate(const CSeq& time_symbol) const {
  const int n = impl_->n;
  const int n_cp = impl_->n_cp;
  if (static_cast<int>(time_symbol.size()) != n + n_cp) {
    throw std::invalid_argument("ofdm::demodulate: time symbol must have length N + N_CP");
  }
  for (int i = 0; i < n; ++i) {
    impl_->buf_in[i][0] = time_symbol[n_cp + i].real();
    impl_->buf_in[i][1] = time_symbol[n_cp + i].imag();
  }
  fftw_execute(impl_->fwd);
  CSeq out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = impl_->scale * cdouble(impl_->buf_out[i][0], impl_->buf_out[i][1]);
  }
  return out;
}

CSeq ofdm_modulate(const CSeq& freq_full, const OfdmConfig& cfg) {
  return OfdmModem(cfg).modulate(freq_full);
}

CSeq ofdm_demodulate(const CSeq& time_symbol, const OfdmConfig& cfg) {
  return OfdmModem(cfg).demodulate(time_symbol);
}

TimeFrame assemble_frame(const std::vector<CSeq>& per_node_diff_symbols,
                         const spread::SpreadingSet& spreading,
                         const std::vector<std::uint8_t>& activity,
                         const SubcarrierAllocation& schedule,
                         const OfdmConfig& cfg) {
  cfg.validate();
  const int n_nodes = spreading.n_nodes();
  if (static_cast<int>(per_node_diff_symbols.size()) != n_nodes ||
      static_cast<int>(activity.size()) != n_nodes) {
    throw std::invalid_argument("ofdm::assemble_frame: per-node inputs must cover all K nodes");
  }
  if (spreading.n_chips() != cfg.n_sc) {
    throw std::invalid_argument("ofdm::assemble_frame: N_S must equal N_SC");
  }

  int n_symbols = -1;
  for (int k = 0; k < n_nodes; ++k) {
    if (!activity[k]) continue;
    const int len = static_cast<int>(per_node_diff_symbols[k].size());
    if (n_symbols < 0) n_symbols = len;
    if (len != n_symbols) {
      throw std::invalid_argument("ofdm::assemble_frame: active nodes must have equal symbol counts");
    }
  }
  if (n_symbols < 0) {
    // no active node: emit an all-zero frame spanning the schedule
    n_symbols = schedule.n_hops() * schedule.hop_interval;
  }
  if (schedule.n_hops() * schedule.hop_interval < n_symbols) {
    throw std::invalid_argument("ofdm::assemble_frame: schedule does not cover the frame");
  }

  OfdmModem modem(cfg);
  TimeFrame frame;
  frame.n_symbols = n_symbols;
  frame.symbol_samples = cfg.symbol_samples();
  frame.samples.resize(static_cast<std::size_t>(n_symbols) * cfg.symbol_samples());

  CVec block(cfg.n_sc);
  for (int i = 0; i < n_symbols; ++i) {
    block.setZero();
    for (int k = 0; k < n_nodes; ++k) {
      if (!activity[k]) continue;
      block += spreading.sequence(k) * per_node_diff_symbols[k][i];
    }
    const CVec full = subcarrier_map(block, schedule.start_of_symbol(i), cfg.n);
    const CSeq sym = modem.modulate(CSeq(full.data(), full.data() + full.size()));
    std::copy(sym.begin(), sym.end(),
              frame.samples.begin() + static_cast<std::size_t>(i) * cfg.symbol_samples());
  }
  return frame;
}

}  // namespace mcsm::ofdm
