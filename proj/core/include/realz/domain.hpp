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
#ifndef REALZ_DOMAIN_HPP_
#define REALZ_DOMAIN_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realz/numeric.hpp"

namespace realz {

// Marks a site whose occupancy is not capped explicitly. Such a site is only
// accepted when exclusion or a total-particle cap bounds it.
inline constexpr int kUnboundedCap = -1;

// Raw description of a finite site set. Turned into a validated Domain.
struct DomainSpec {
  std::vector<std::string> labels;  // empty: "0", "1", ...
  Matrix<double> distance;          // S x S, symmetric, zero diagonal
  std::vector<int> caps;            // k_i, or kUnboundedCap
  std::optional<double> exclusion_diameter;
  std::optional<int> total_cap;
  std::optional<int> total_exact;
};

// Finite site set with pairwise distances and the constraints that define
// which occupancy vectors are admissible. Immutable once constructed.
class Domain {
 public:
  explicit Domain(DomainSpec spec);

  // S sites, every pair at distance 1, occupancy cap k everywhere.
  static Domain uniform(std::size_t sites, int cap);
  static Domain lattice_gas(std::size_t sites) { return uniform(sites, 1); }
  static Domain single_site(int cap) { return uniform(1, cap); }

  // Discrete torus with the given side lengths; sites are numbered
  // row-major (last coordinate fastest) and the distance is the wrapped L1
  // distance.
  static Domain torus(std::span<const int> dims, int cap,
                      std::optional<double> exclusion_diameter = {});

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix<double>& distance() const { return distance_; }
  double distance(std::size_t i, std::size_t j) const {
    return distance_(i, j);
  }

  // Effective per-site cap after folding in exclusion and total caps.
  const std::vector<int>& caps() const { return caps_; }
  int cap(std::size_t i) const { return caps_[i]; }

  const std::optional<double>& exclusion_diameter() const { return exclusion_; }
  const std::optional<int>& total_cap() const { return total_cap_; }
  const std::optional<int>& total_exact() const { return total_exact_; }

  bool has_exclusion() const { return exclusion_ && *exclusion_ > 0.0; }
  bool is_lattice_gas() const;

  // True when sites i != j may not be occupied together.
  bool excludes(std::size_t i, std::size_t j) const;

  // Same domain with every finite cap replaced by `cap`.
  Domain with_cap(int cap) const;

 private:
  std::vector<std::string> labels_;
  Matrix<double> distance_;
  std::vector<int> caps_;
  std::optional<double> exclusion_;
  std::optional<int> total_cap_;
  std::optional<int> total_exact_;
};

// Occupancy vector: n_i particles at site i.
struct Configuration {
  std::vector<int> occupancy;

  std::size_t size() const { return occupancy.size(); }
  int operator[](std::size_t i) const { return occupancy[i]; }
  int total() const;
  bool empty_configuration() const { return total() == 0; }

  auto operator<=>(const Configuration&) const = default;
  bool operator==(const Configuration&) const = default;
};

bool is_admissible(const Domain& domain, const Configuration& config);

}  // namespace realz

#endif  // REALZ_DOMAIN_HPP_
