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

#include "gatefid/operators.hpp"

namespace gatefid {

OperatorMatrix embed(const Matrix& op, int site, const SystemLayout& layout) {
    if (site < 0 || site >= layout.num_subsystems())
        throw ValidationError("embed: subsystem index " + std::to_string(site) +
                              " out of range");
    const int d = layout.dims()[site];
    if (op.rows() != d || op.cols() != d)
        throw ValidationError("embed: operator is " + std::to_string(op.rows()) + "x" +
                              std::to_string(op.cols()) + " but subsystem " +
                              std::to_string(site) + " has dimension " + std::to_string(d));

    Eigen::Index left = 1, right = 1;
    for (int s = 0; s < site; ++s) left *= layout.dims()[s];
    for (int s = site + 1; s < layout.num_subsystems(); ++s) right *= layout.dims()[s];

    Matrix full = kron(kron(Matrix::Identity(left, left), op),
                       Matrix::Identity(right, right));
    return {layout, std::move(full)};
}

Matrix project_cmp(const OperatorMatrix& op) {
    const auto& idx = op.layout.cmp_indices();
    const Eigen::Index d = op.layout.cmp_dim();
    Matrix out(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) out(i, j) = op.data(idx[i], idx[j]);
    return out;
}

Complex trace_cmp(const OperatorMatrix& op) {
    Complex tr = 0.0;
    for (Eigen::Index i : op.layout.cmp_indices()) tr += op.data(i, i);
    return tr;
}

Matrix ketbra(const SystemLayout& layout, const std::vector<int>& ket,
              const std::vector<int>& bra) {
    Matrix out = Matrix::Zero(layout.full_dim(), layout.full_dim());
    out(layout.index_of(ket), layout.index_of(bra)) = 1.0;
    return out;
}

Matrix embed_cmp(const SystemLayout& layout, const Matrix& cmp_block) {
    const Eigen::Index d = layout.cmp_dim();
    if (cmp_block.rows() != d || cmp_block.cols() != d)
        throw ValidationError("embed_cmp: block size does not match cmp_dim");
    Matrix out = Matrix::Zero(layout.full_dim(), layout.full_dim());
    const auto& idx = layout.cmp_indices();
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) out(idx[i], idx[j]) = cmp_block(i, j);
    return out;
}

}  // namespace gatefid
