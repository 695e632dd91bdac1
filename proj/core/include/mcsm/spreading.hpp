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
#include <string>

#include "mcsm/types.hpp"

namespace mcsm::spread {

enum class Family {
  random_qpsk_chips,                  // chips from {1, j, -1, -j}/sqrt(N_S)
  random_complex_gaussian_normalized, // CN(0,1) entries, column-normalized
};

/// The K node-specific signatures, stacked as columns of the sensing matrix.
/// Every column has unit 2-norm.
struct SpreadingSet {
  CMat matrix;  // N_S x K
  std::uint64_t seed = 0;
  Family family = Family::random_qpsk_chips;

  int n_chips() const { return static_cast<int>(matrix.rows()); }
  int n_nodes() const { return static_cast<int>(matrix.cols()); }
  auto sequence(int k) const { return matrix.col(k); }

  /// Throws std::invalid_argument if any column is not unit-norm or two
  /// columns coincide.
  void validate() const;
};

/// Deterministic generation given (seed, family).
SpreadingSet generate_sequences(int n_nodes, int n_chips, std::uint64_t seed,
                                Family family = Family::random_qpsk_chips);

/// Wrap an externally supplied matrix (e.g. loaded from file).
SpreadingSet from_matrix(CMat matrix);

/// One spread symbol: s_k * b.
CVec spread_symbol(const Eigen::Ref<const CVec>& s_k, cdouble b);

/// Text interchange format: one row per subcarrier (chip), K entries per row,
/// each entry "re+imj". Round-trips exactly.
void save_matrix(const SpreadingSet& set, const std::string& path);
SpreadingSet load_matrix(const std::string& path);

}  // namespace mcsm::spread
