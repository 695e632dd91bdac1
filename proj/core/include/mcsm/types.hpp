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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace mcsm {

using cdouble = std::complex<double>;

/// Hard bits, one per element, values restricted to {0,1}.
using Bits = std::vector<std::uint8_t>;

/// A stream of complex baseband symbols.
using CSeq = std::vector<cdouble>;

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

}  // namespace mcsm
