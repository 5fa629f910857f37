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
#include "realz/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "realz/error.hpp"

namespace realz {
namespace {

// Depth-first walk over sites in index order, choosing n_i = 0, 1, ... so the
// leaves come out in lexicographic order.
class Enumerator {
 public:
  Enumerator(const Domain& domain,
             const std::function<void(const Configuration&)>& visit,
             std::size_t limit)
      : domain_(domain), visit_(visit), limit_(limit) {
    const std::size_t s = domain.size();
    config_.occupancy.assign(s, 0);
    // Remaining capacity from site i onwards, used to prune exact-total
    // searches that can no longer reach the target.
    suffix_capacity_.assign(s + 1, 0);
    for (std::size_t i = s; i-- > 0;) {
      suffix_capacity_[i] = suffix_capacity_[i + 1] + domain.cap(i);
    }
  }

  void run() { descend(0, 0); }

 private:
  void descend(std::size_t site, int total) {
    const std::size_t s = domain_.size();
    if (site == s) {
      if (domain_.total_exact() && total != *domain_.total_exact()) return;
      if (++count_ > limit_) throw CapacityError(limit_);
      visit_(config_);
      return;
    }
    if (domain_.total_exact() &&
        total + suffix_capacity_[site] < *domain_.total_exact()) {
      return;
    }
    int upper = domain_.cap(site);
    if (domain_.total_cap()) upper = std::min(upper, *domain_.total_cap() - total);
    if (domain_.total_exact()) upper = std::min(upper, *domain_.total_exact() - total);
    if (upper > 0 && blocked(site)) upper = 0;
    for (int n = 0; n <= upper; ++n) {
      config_.occupancy[site] = n;
      descend(site + 1, total + n);
    }
    config_.occupancy[site] = 0;
  }

  bool blocked(std::size_t site) const {
    if (!domain_.has_exclusion()) return false;
    for (std::size_t j = 0; j < site; ++j) {
      if (config_.occupancy[j] > 0 && domain_.excludes(site, j)) return true;
    }
    return false;
  }

  const Domain& domain_;
  const std::function<void(const Configuration&)>& visit_;
  std::size_t limit_;
  std::size_t count_ = 0;
  Configuration config_;
  std::vector<int> suffix_capacity_;
};

}  // namespace

void for_each_configuration(const Domain& domain,
                            const std::function<void(const Configuration&)>& visit,
                            std::size_t limit) {
  Enumerator(domain, visit, limit).run();
}

std::vector<Configuration> enumerate_configurations(const Domain& domain,
                                                    std::size_t limit) {
  std::vector<Configuration> out;
  for_each_configuration(
      domain, [&](const Configuration& c) { out.push_back(c); }, limit);
  return out;
}

std::size_t count_configurations(const Domain& domain, std::size_t limit) {
  std::size_t n = 0;
  for_each_configuration(domain, [&](const Configuration&) { ++n; }, limit);
  return n;
}

RangeSet::RangeSet(std::vector<double> sorted_values)
    : values_(std::move(sorted_values)) {
  if (values_.empty()) throw InvalidInputError("range set is empty");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i - 1] < values_[i])) {
      throw InvalidInputError("range set values must be strictly increasing");
    }
  }
}

bool RangeSet::contains(double x, double tol) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), x - tol);
  return it != values_.end() && *it <= x + tol;
}

std::optional<double> RangeSet::below(double x) const {
  if (x < min()) return std::nullopt;
  auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return *(it - 1);
}

std::optional<double> RangeSet::above(double x) const {
  if (x > max()) return std::nullopt;
  return *std::lower_bound(values_.begin(), values_.end(), x);
}

RangeSet range_of(std::span<const double> f, const Domain& domain,
                  double merge_tol, std::size_t limit) {
  if (f.size() != domain.size()) {
    throw DimensionError("test function has " + std::to_string(f.size()) +
                         " entries, domain has " + std::to_string(domain.size()));
  }
  std::vector<double> raw;
  for_each_configuration(
      domain,
      [&](const Configuration& c) {
        double v = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) v += f[i] * c[i];
        raw.push_back(v);
      },
      limit);
  if (raw.empty()) throw InvalidInputError("domain has no admissible configuration");
  std::sort(raw.begin(), raw.end());
  std::vector<double> merged;
  for (double v : raw) {
    if (merged.empty() || v - merged.back() > merge_tol) merged.push_back(v);
  }
  return RangeSet(std::move(merged));
}

int max_occupancy(const Domain& domain, std::span<const std::size_t> window,
                  std::size_t limit) {
  for (std::size_t i : window) {
    if (i >= domain.size()) throw DimensionError("window site out of range");
  }
  int best = -1;
  for_each_configuration(
      domain,
      [&](const Configuration& c) {
        int n = 0;
        for (std::size_t i : window) n += c[i];
        best = std::max(best, n);
      },
      limit);
  if (best < 0) throw InvalidInputError("domain has no admissible configuration");
  return best;
}

}  // namespace realz
