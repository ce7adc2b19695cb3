// Copyright 2026 The gatefid developers
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
#include <vector>

#include "gatefid/core.hpp"

namespace gatefid {

/// One element f_i of the N-qubit Pauli-product basis. f_0 is the identity
/// and Tr[f_i f_j] = 2^N delta_ij.
struct BasisElement {
    std::size_t index;
    Matrix matrix;  // 2^N x 2^N
};

/// All 4^N Pauli products, ordered by the combined little-endian index
/// i = i_1 + 4 i_2 + ... + 4^{N-1} i_N (subsystem 1 = leftmost tensor factor,
/// digit values 0..3 = 1, x, y, z).
std::vector<BasisElement> pauli_basis(int n_qubits, int cap = 6);

/// The four single-qubit Pauli matrices 1, x, y, z.
const Matrix& pauli(int which);

}  // namespace gatefid
