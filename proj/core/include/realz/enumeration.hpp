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
#ifndef REALZ_ENUMERATION_HPP_
#define REALZ_ENUMERATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "realz/domain.hpp"

namespace realz {

inline constexpr std::size_t kDefaultEnumerationLimit = 10'000'000;
inline constexpr double kDefaultRangeMergeTolerance = 1e-12;

// Calls `visit` on every admissible configuration in lexicographic order of
// occupancy vectors. Throws CapacityError once more than `limit`
// configurations have been produced.
void for_each_configuration(const Domain& domain,
                            const std::function<void(const Configuration&)>& visit,
                            std::size_t limit = kDefaultEnumerationLimit);

std::vector<Configuration> enumerate_configurations(
    const Domain& domain, std::size_t limit = kDefaultEnumerationLimit);

std::size_t count_configurations(const Domain& domain,
                                 std::size_t limit = kDefaultEnumerationLimit);

// The range F of eta -> <f, eta> over admissible configurations.
class RangeSet {
 public:
  explicit RangeSet(std::vector<double> sorted_values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  bool contains(double x, double tol = kDefaultRangeMergeTolerance) const;

  // Largest element <= x and smallest element >= x; empty when x lies
  // outside [min, max].
  std::optional<double> below(double x) const;
  std::optional<double> above(double x) const;

 private:
  std::vector<double> values_;
};

RangeSet range_of(std::span<const double> f, const Domain& domain,
                  double merge_tol = kDefaultRangeMergeTolerance,
                  std::size_t limit = kDefaultEnumerationLimit);

// Maximum of sum_{i in window} n_i over admissible configurations.
int max_occupancy(const Domain& domain, std::span<const std::size_t> window,
                  std::size_t limit = kDefaultEnumerationLimit);

}  // namespace realz

#endif  // REALZ_ENUMERATION_HPP_
