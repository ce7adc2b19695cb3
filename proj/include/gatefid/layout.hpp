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

#include <array>
#include <vector>

#include "gatefid/core.hpp"

namespace gatefid {

/// Composition of multi-level subsystems with two designated computational
/// levels each. The computational subspace has dimension 2^N regardless of
/// how many physical levels the subsystems carry.
class SystemLayout {
  public:
    /// Validates and builds a layout. cmp_levels defaults to (0,1) per
    /// subsystem; each entry must name two distinct levels of its subsystem.
    static SystemLayout compose(std::vector<int> dims,
                                std::vector<std::array<int, 2>> cmp_levels = {});

    int num_subsystems() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<std::array<int, 2>>& cmp_levels() const { return cmp_levels_; }
    Eigen::Index full_dim() const { return full_dim_; }
    Eigen::Index cmp_dim() const { return cmp_dim_; }

    /// Full-space indices of the computational basis, ordered
    /// lexicographically by subsystem (|00..0>, |00..1>, ..., |11..1>).
    const std::vector<Eigen::Index>& cmp_indices() const { return cmp_indices_; }

    /// Flatten per-subsystem physical levels into a full-space index
    /// (subsystem 0 is the leftmost / most significant factor).
    Eigen::Index index_of(const std::vector<int>& levels) const;

    bool operator==(const SystemLayout& other) const {
        return dims_ == other.dims_ && cmp_levels_ == other.cmp_levels_;
    }

  private:
    SystemLayout() = default;

    std::vector<int> dims_;
    std::vector<std::array<int, 2>> cmp_levels_;
    Eigen::Index full_dim_ = 0;
    Eigen::Index cmp_dim_ = 0;
    std::vector<Eigen::Index> cmp_indices_;
};

}  // namespace gatefid
