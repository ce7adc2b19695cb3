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

#include "gatefid/pauli.hpp"

#include <array>

namespace gatefid {

const Matrix& pauli(int which) {
    static const std::array<Matrix, 4> sigma = [] {
        std::array<Matrix, 4> s;
        for (auto& m : s) m = Matrix::Zero(2, 2);
        s[0] << 1, 0, 0, 1;
        s[1] << 0, 1, 1, 0;
        s[2] << 0, Complex(0, -1), Complex(0, 1), 0;
        s[3] << 1, 0, 0, -1;
        return s;
    }();
    if (which < 0 || which > 3) throw ValidationError("pauli: index must be 0..3");
    return sigma[which];
}

std::vector<BasisElement> pauli_basis(int n_qubits, int cap) {
    if (n_qubits < 1) throw ValidationError("pauli_basis: need N >= 1");
    if (n_qubits > cap)
        throw ValidationError("pauli_basis: N = " + std::to_string(n_qubits) +
                              " exceeds cap " + std::to_string(cap));

    const std::size_t count = std::size_t{1} << (2 * n_qubits);
    std::vector<BasisElement> basis;
    basis.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // little-endian base-4 digits: digit j selects the Pauli on site j
        Matrix m = pauli(static_cast<int>(i & 3));
        std::size_t rest = i >> 2;
        for (int s = 1; s < n_qubits; ++s, rest >>= 2) m = kron(m, pauli(static_cast<int>(rest & 3)));
        basis.push_back({i, std::move(m)});
    }
    return basis;
}

}  // namespace gatefid
