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

#include "mcsm/spreading.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "mcsm/rng.hpp"

namespace mcsm::spread {

namespace {

constexpr double kNormTol = 1e-12;

std::string format_entry(cdouble z) {
  const double re = z.real();
  const double im = z.imag();
  // "{}" prints the shortest representation that round-trips the double.
  if (im < 0 || (im == 0.0 && std::signbit(im))) {
    return fmt::format("{}-{}j", re, -im);
  }
  return fmt::format("{}+{}j", re, im);
}

cdouble parse_entry(const std::string& tok) {
  if (tok.size() < 2 || tok.back() != 'j') {
    throw std::runtime_error("spreading file: malformed entry '" + tok + "'");
  }
  // Split at the sign of the imaginary part: the last '+'/'-' that is not an
  // exponent sign and not the leading sign of the real part.
  std::size_t split = std::string::npos;
  for (std::size_t i = tok.size() - 1; i >= 1; --i) {
    const char c = tok[i];
    if ((c == '+' || c == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    throw std::runtime_error("spreading file: malformed entry '" + tok + "'");
  }
  const double re = std::stod(tok.substr(0, split));
  const double im = std::stod(tok.substr(split, tok.size() - 1 - split));
  return {re, im};
}

}  // namespace

void SpreadingSet::validate() const {
  if (matrix.rows() < 1 || matrix.cols() < 1) {
    throw std::invalid_argument("spreading: matrix must be nonempty");
  }
  for (int k = 0; k < n_nodes(); ++k) {
    if (std::abs(matrix.col(k).norm() - 1.0) > kNormTol) {
      throw std::invalid_argument(
          fmt::format("spreading: column {} is not unit-norm", k));
    }
  }
  for (int k = 0; k < n_nodes(); ++k) {
    for (int l = k + 1; l < n_nodes(); ++l) {
      if (matrix.col(k) == matrix.col(l)) {
        throw std::invalid_argument(
            fmt::format("spreading: columns {} and {} are identical", k, l));
      }
    }
  }
}

SpreadingSet generate_sequences(int n_nodes, int n_chips, std::uint64_t seed,
                                Family family) {
  if (n_nodes < 1 || n_chips < 1) {
    throw std::invalid_argument("spreading: K >= 1 and N_S >= 1 required");
  }
  Rng rng(derive_seed(seed, 0x5EEDu));
  CMat S(n_chips, n_nodes);
  const double chip_scale = 1.0 / std::sqrt(static_cast<double>(n_chips));
  for (int k = 0; k < n_nodes; ++k) {
    switch (family) {
      case Family::random_qpsk_chips:
        for (int i = 0; i < n_chips; ++i) {
          static constexpr cdouble kQpsk[4] = {
              {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
          S(i, k) = chip_scale * kQpsk[rng.uniform_int(4)];
        }
        break;
      case Family::random_complex_gaussian_normalized: {
        for (int i = 0; i < n_chips; ++i) S(i, k) = rng.complex_gaussian();
        S.col(k) /= S.col(k).norm();
        break;
      }
    }
  }
  SpreadingSet set{std::move(S), seed, family};
  set.validate();
  return set;
}

SpreadingSet from_matrix(CMat matrix) {
  SpreadingSet set{std::move(matrix), 0, Family::random_qpsk_chips};
  set.validate();
  return set;
}

CVec spread_symbol(const Eigen::Ref<const CVec>& s_k, cdouble b) {
  if (std::abs(s_k.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("spreading: sequence must be unit-norm");
  }
  return s_k * b;
}

void save_matrix(const SpreadingSet& set, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("spreading: cannot open '" + path + "' for writing");
  for (int i = 0; i < set.n_chips(); ++i) {
    for (int k = 0; k < set.n_nodes(); ++k) {
      if (k > 0) out << ' ';
      out << format_entry(set.matrix(i, k));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("spreading: write to '" + path + "' failed");
}

SpreadingSet load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("spreading: cannot open '" + path + "'");
  std::vector<std::vector<cdouble>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<cdouble> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_entry(tok));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::runtime_error("spreading file: ragged rows in '" + path + "'");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("spreading file: empty matrix in '" + path + "'");
  CMat S(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    }
  }
  return from_matrix(std::move(S));
}

}  // namespace mcsm::spread
