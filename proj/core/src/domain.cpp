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
#include "realz/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

namespace realz {

Domain::Domain(DomainSpec spec)
    : labels_(std::move(spec.labels)),
      distance_(std::move(spec.distance)),
      caps_(std::move(spec.caps)),
      exclusion_(spec.exclusion_diameter),
      total_cap_(spec.total_cap),
      total_exact_(spec.total_exact) {
  const std::size_t sites = caps_.size();
  if (sites == 0) throw InvalidInputError("domain needs at least one site");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < sites; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != sites) {
    throw DimensionError("label count " + std::to_string(labels_.size()) +
                         " does not match site count " + std::to_string(sites));
  }
  if (distance_.rows() != sites || distance_.cols() != sites) {
    throw DimensionError("distance matrix must be " + std::to_string(sites) +
                         "x" + std::to_string(sites));
  }
  for (std::size_t i = 0; i < sites; ++i) {
    if (distance_(i, i) != 0.0) {
      throw InvalidInputError("distance matrix must have a zero diagonal");
    }
    for (std::size_t j = 0; j < sites; ++j) {
      const double d = distance_(i, j);
      if (!std::isfinite(d) || d < 0.0) {
        throw InvalidInputError("distances must be finite and nonnegative");
      }
      if (d != distance_(j, i)) {
        throw InvalidInputError("distance matrix must be symmetric");
      }
    }
  }
  if (exclusion_ && (!std::isfinite(*exclusion_) || *exclusion_ < 0.0)) {
    throw InvalidInputError("exclusion diameter must be finite and nonnegative");
  }
  if (total_cap_ && total_exact_) {
    throw InvalidInputError("total_cap and total_exact are mutually exclusive");
  }
  if ((total_cap_ && *total_cap_ < 0) || (total_exact_ && *total_exact_ < 0)) {
    throw InvalidInputError("particle-number caps must be nonnegative");
  }

  const std::optional<int> total = total_cap_ ? total_cap_ : total_exact_;
  for (std::size_t i = 0; i < sites; ++i) {
    int& k = caps_[i];
    if (k < 0 && k != kUnboundedCap) {
      throw InvalidInputError("occupancy caps must be nonnegative");
    }
    if (has_exclusion()) {
      k = k == kUnboundedCap ? 1 : std::min(k, 1);
    }
    if (total) {
      k = k == kUnboundedCap ? *total : std::min(k, *total);
    }
    if (k == kUnboundedCap) throw UnboundedSiteError(i);
  }
}

Domain Domain::uniform(std::size_t sites, int cap) {
  DomainSpec spec;
  spec.distance = Matrix<double>(sites, sites, 1.0);
  for (std::size_t i = 0; i < sites; ++i) spec.distance(i, i) = 0.0;
  spec.caps.assign(sites, cap);
  return Domain(std::move(spec));
}

Domain Domain::torus(std::span<const int> dims, int cap,
                     std::optional<double> exclusion_diameter) {
  if (dims.empty()) throw InvalidInputError("torus needs at least one dimension");
  std::size_t sites = 1;
  for (int d : dims) {
    if (d <= 0) throw InvalidInputError("torus dimensions must be positive");
    sites *= static_cast<std::size_t>(d);
  }
  auto coords = [&](std::size_t index) {
    std::vector<int> c(dims.size());
    for (std::size_t a = dims.size(); a-- > 0;) {
      c[a] = static_cast<int>(index % static_cast<std::size_t>(dims[a]));
      index /= static_cast<std::size_t>(dims[a]);
    }
    return c;
  };
  DomainSpec spec;
  spec.distance = Matrix<double>(sites, sites);
  for (std::size_t i = 0; i < sites; ++i) {
    const auto ci = coords(i);
    std::string label;
    for (std::size_t a = 0; a < ci.size(); ++a) {
      label += (a ? "," : "") + std::to_string(ci[a]);
    }
    spec.labels.push_back("(" + label + ")");
    for (std::size_t j = 0; j < sites; ++j) {
      const auto cj = coords(j);
      int dist = 0;
      for (std::size_t a = 0; a < dims.size(); ++a) {
        const int delta = std::abs(ci[a] - cj[a]);
        dist += std::min(delta, dims[a] - delta);
      }
      spec.distance(i, j) = dist;
    }
  }
  spec.caps.assign(sites, cap);
  spec.exclusion_diameter = exclusion_diameter;
  return Domain(std::move(spec));
}

bool Domain::is_lattice_gas() const {
  return std::all_of(caps_.begin(), caps_.end(), [](int k) { return k <= 1; });
}

bool Domain::excludes(std::size_t i, std::size_t j) const {
  return i != j && has_exclusion() && distance_(i, j) < *exclusion_;
}

Domain Domain::with_cap(int cap) const {
  DomainSpec spec;
  spec.labels = labels_;
  spec.distance = distance_;
  spec.caps.assign(size(), cap);
  spec.exclusion_diameter = exclusion_;
  spec.total_cap = total_cap_;
  spec.total_exact = total_exact_;
  return Domain(std::move(spec));
}

int Configuration::total() const {
  return std::accumulate(occupancy.begin(), occupancy.end(), 0);
}

bool is_admissible(const Domain& domain, const Configuration& config) {
  if (config.size() != domain.size()) {
    throw DimensionError("configuration has " + std::to_string(config.size()) +
                         " sites, domain has " + std::to_string(domain.size()));
  }
  int total = 0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const int n = config[i];
    if (n < 0 || n > domain.cap(i)) return false;
    total += n;
  }
  if (domain.total_cap() && total > *domain.total_cap()) return false;
  if (domain.total_exact() && total != *domain.total_exact()) return false;
  if (domain.has_exclusion()) {
    for (std::size_t i = 0; i < config.size(); ++i) {
      if (config[i] == 0) continue;
      if (config[i] > 1) return false;
      for (std::size_t j = i + 1; j < config.size(); ++j) {
        if (config[j] > 0 && domain.excludes(i, j)) return false;
      }
    }
  }
  return true;
}

}  // namespace realz
