// Copyright 2026 The Realz Authors
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
#ifndef REALZ_SRC_MOMENT_LP_HPP_
#define REALZ_SRC_MOMENT_LP_HPP_

// Shared LP assembly for the full and the orbit-reduced realizability
// problems.
//
// Each LP row is a group of moment keys whose values are summed; each LP
// column is a block of configurations that share one variable, the block's
// mass being spread uniformly over its members. The full problem uses one
// key per row and one configuration per block. The stationary problem uses
// orbits of keys and orbits of configurations, which is valid because every
// row value is constant on a configuration orbit when the row groups are
// themselves invariant.

#include <cstddef>
#include <vector>

#include "realz/correlation.hpp"
#include "realz/solver.hpp"

namespace realz::detail {

struct RowKey {
  enum class Kind { kNormalization, kDensity, kPair };
  Kind kind = Kind::kNormalization;
  std::size_t i = 0;
  std::size_t j = 0;  // kPair only, i <= j
};

using RowGroup = std::vector<RowKey>;

struct ColumnBlock {
  std::vector<Configuration> members;  // members.front() is the representative
};

// Normalization, then rho1 per site, then rho2 for i <= j in row-major order.
std::vector<RowKey> moment_keys(std::size_t sites);
std::vector<RowGroup> singleton_groups(std::size_t sites);
std::vector<ColumnBlock> singleton_blocks(std::vector<Configuration> configs);

long long key_value(const RowKey& key, const Configuration& config);

template <class T>
T key_target(const RowKey& key, const BasicCorrelationPair<T>& corr);

template <class T>
RealizationResult realize(const BasicCorrelationPair<T>& corr,
                          const std::vector<RowGroup>& groups,
                          const std::vector<ColumnBlock>& blocks,
                          const SolverOptions& opts);

template <class T>
ThirdMomentResult minimize_third_moment(const BasicCorrelationPair<T>& corr,
                                        const std::vector<RowGroup>& groups,
                                        const std::vector<ColumnBlock>& blocks,
                                        const SolverOptions& opts);

}  // namespace realz::detail

#endif  // REALZ_SRC_MOMENT_LP_HPP_
