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

#include "gatefid/layout.hpp"

namespace gatefid {

SystemLayout SystemLayout::compose(std::vector<int> dims,
                                   std::vector<std::array<int, 2>> cmp_levels) {
    if (dims.empty()) throw ValidationError("layout: need at least one subsystem");
    if (cmp_levels.empty()) cmp_levels.assign(dims.size(), {0, 1});
    if (cmp_levels.size() != dims.size())
        throw ValidationError("layout: cmp_levels count does not match subsystem count");

    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (dims[s] < 2)
            throw ValidationError("layout: subsystem " + std::to_string(s) +
                                  " has dimension " + std::to_string(dims[s]) + " < 2");
        const auto& [a, b] = cmp_levels[s];
        if (a == b || a < 0 || b < 0 || a >= dims[s] || b >= dims[s])
            throw ValidationError("layout: invalid computational levels for subsystem " +
                                  std::to_string(s));
    }

    SystemLayout out;
    out.dims_ = std::move(dims);
    out.cmp_levels_ = std::move(cmp_levels);
    out.full_dim_ = 1;
    for (int d : out.dims_) out.full_dim_ *= d;
    out.cmp_dim_ = Eigen::Index{1} << out.dims_.size();

    // lexicographic enumeration of the computational basis
    const int n = out.num_subsystems();
    out.cmp_indices_.reserve(out.cmp_dim_);
    for (Eigen::Index k = 0; k < out.cmp_dim_; ++k) {
        Eigen::Index idx = 0;
        for (int s = 0; s < n; ++s) {
            const int bit = static_cast<int>((k >> (n - 1 - s)) & 1);
            idx = idx * out.dims_[s] + out.cmp_levels_[s][bit];
        }
        out.cmp_indices_.push_back(idx);
    }
    return out;
}

Eigen::Index SystemLayout::index_of(const std::vector<int>& levels) const {
    if (static_cast<int>(levels.size()) != num_subsystems())
        throw ValidationError("index_of: wrong number of levels");
    Eigen::Index idx = 0;
    for (int s = 0; s < num_subsystems(); ++s) {
        if (levels[s] < 0 || levels[s] >= dims_[s])
            throw ValidationError("index_of: level out of range for subsystem " +
                                  std::to_string(s));
        idx = idx * dims_[s] + levels[s];
    }
    return idx;
}

}  // namespace gatefid
