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

#include "gatefid/core.hpp"
#include "gatefid/layout.hpp"

namespace gatefid {

/// Dense complex matrix on the full Hilbert space of a layout.
struct OperatorMatrix {
    OperatorMatrix(SystemLayout layout_, Matrix data_)
        : layout(std::move(layout_)), data(std::move(data_)) {
        if (data.rows() != data.cols() || data.rows() != layout.full_dim())
            throw ValidationError("operator: matrix is " + std::to_string(data.rows()) + "x" +
                                  std::to_string(data.cols()) + ", layout full_dim is " +
                                  std::to_string(layout.full_dim()));
    }

    SystemLayout layout;
    Matrix data;
};

/// Kronecker embedding 1 x ... x op x ... x 1 with subsystem `site` as the
/// given factor (site 0 leftmost).
OperatorMatrix embed(const Matrix& op, int site, const SystemLayout& layout);

/// P op P restricted to the computational subspace (cmp_dim x cmp_dim),
/// basis ordered lexicographically by per-subsystem computational level.
Matrix project_cmp(const OperatorMatrix& op);

/// Trace over the computational subspace states.
Complex trace_cmp(const OperatorMatrix& op);

/// |bra><ket| outer product in the full space, from per-subsystem levels.
Matrix ketbra(const SystemLayout& layout, const std::vector<int>& ket,
              const std::vector<int>& bra);

/// Embed a cmp_dim x cmp_dim matrix into the full space on the computational
/// basis, zero elsewhere.
Matrix embed_cmp(const SystemLayout& layout, const Matrix& cmp_block);

}  // namespace gatefid
