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
#include "realz/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "moment_lp.hpp"
#include "realz/enumeration.hpp"
#include "realz/error.hpp"

namespace realz {

FiniteGroup::FiniteGroup(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidInputError("group needs at least one element");
  const std::size_t s = elements_.front().size();
  std::set<Permutation> seen;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    const auto& p = elements_[k];
    if (p.size() != s) throw DimensionError("group elements act on different site counts");
    std::vector<char> hit(s, 0);
    for (std::size_t x : p) {
      if (x >= s || hit[x]) throw InvalidInputError("group element is not a permutation");
      hit[x] = 1;
    }
    if (!seen.insert(p).second) throw InvalidInputError("group has a repeated element");
  }
  Permutation id(s);
  std::iota(id.begin(), id.end(), std::size_t{0});
  identity_ = index_of(id);
  if (identity_ == elements_.size()) throw InvalidInputError("group lacks the identity");
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (compose(a, b) == order()) {
        throw InvalidInputError("group is not closed under composition");
      }
    }
  }
}

FiniteGroup FiniteGroup::trivial(std::size_t sites) {
  Permutation id(sites);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return FiniteGroup({std::move(id)});
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  const auto it = std::find(elements_.begin(), elements_.end(), p);
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::compose(std::size_t a, std::size_t b) const {
  const auto& pa = elements_[a];
  const auto& pb = elements_[b];
  Permutation c(pa.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = pa[pb[i]];
  return index_of(c);
}

std::size_t FiniteGroup::inverse(std::size_t k) const {
  const auto& p = elements_[k];
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return index_of(inv);
}

bool FiniteGroup::acts_on(const Domain& domain) const {
  if (sites() != domain.size()) return false;
  for (const auto& p : elements_) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (domain.cap(p[i]) != domain.cap(i)) return false;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (domain.distance(p[i], p[j]) != domain.distance(i, j)) return false;
      }
    }
  }
  return true;
}

Configuration FiniteGroup::apply(std::size_t k, const Configuration& config) const {
  const auto& p = elements_[k];
  if (config.size() != p.size()) throw DimensionError("configuration size differs from group");
  Configuration out{std::vector<int>(p.size(), 0)};
  for (std::size_t i = 0; i < p.size(); ++i) out.occupancy[p[i]] = config[i];
  return out;
}

namespace {

std::vector<int> coords_of(std::span<const int> dims, std::size_t index) {
  std::vector<int> c(dims.size());
  for (std::size_t a = dims.size(); a-- > 0;) {
    c[a] = static_cast<int>(index % static_cast<std::size_t>(dims[a]));
    index /= static_cast<std::size_t>(dims[a]);
  }
  return c;
}

std::size_t index_of_coords(std::span<const int> dims, const std::vector<int>& c) {
  std::size_t index = 0;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    const int wrapped = ((c[a] % dims[a]) + dims[a]) % dims[a];
    index = index * static_cast<std::size_t>(dims[a]) + static_cast<std::size_t>(wrapped);
  }
  return index;
}

std::size_t site_count(std::span<const int> dims) {
  if (dims.empty()) throw InvalidInputError("torus needs at least one dimension");
  std::size_t s = 1;
  for (int d : dims) {
    if (d <= 0) throw InvalidInputError("torus dimensions must be positive");
    s *= static_cast<std::size_t>(d);
  }
  return s;
}

template <class T>
BasicDistribution<T> symmetrize_impl(const BasicDistribution<T>& dist,
                                     const FiniteGroup& group) {
  validate_distribution(dist);
  BasicDistribution<T> out;
  const auto order = static_cast<long long>(group.order());
  for (const auto& atom : dist.atoms) {
    const T share = atom.weight / order;
    for (std::size_t k = 0; k < group.order(); ++k) {
      out.atoms.push_back({group.apply(k, atom.config), share});
    }
  }
  return canonicalize(std::move(out));
}

template <class T>
bool stationary_impl(const BasicCorrelationPair<T>& corr, const FiniteGroup& group,
                     double tol) {
  if (corr.size() != group.sites()) throw DimensionError("group and correlations differ in size");
  auto close = [tol](const T& a, const T& b) {
    if constexpr (kIsExact<T>) {
      return a == b;
    } else {
      return std::abs(a - b) <= tol;
    }
  };
  for (const auto& p : group.elements()) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!close(corr.rho1[p[i]], corr.rho1[i])) return false;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (!close(corr.rho2(p[i], p[j]), corr.rho2(i, j))) return false;
      }
    }
  }
  return true;
}

detail::RowKey act(const Permutation& p, const detail::RowKey& key) {
  using Kind = detail::RowKey::Kind;
  switch (key.kind) {
    case Kind::kNormalization:
      return key;
    case Kind::kDensity:
      return {Kind::kDensity, p[key.i], 0};
    case Kind::kPair:
      return {Kind::kPair, std::min(p[key.i], p[key.j]), std::max(p[key.i], p[key.j])};
  }
  return key;
}

std::vector<detail::RowGroup> key_orbits(const FiniteGroup& group) {
  const auto keys = detail::moment_keys(group.sites());
  auto tag = [](const detail::RowKey& k) {
    return std::tuple(static_cast<int>(k.kind), k.i, k.j);
  };
  std::set<std::tuple<int, std::size_t, std::size_t>> assigned;
  std::vector<detail::RowGroup> groups;
  for (const auto& key : keys) {
    if (assigned.count(tag(key))) continue;
    detail::RowGroup orbit;
    for (const auto& p : group.elements()) {
      const auto image = act(p, key);
      if (assigned.insert(tag(image)).second) orbit.push_back(image);
    }
    groups.push_back(std::move(orbit));
  }
  return groups;
}

// Configuration orbits in lexicographic order of their minimal member,
// which is stored first.
std::vector<detail::ColumnBlock> config_orbits(const std::vector<Configuration>& configs,
                                               const FiniteGroup& group) {
  std::map<Configuration, bool> assigned;
  for (const auto& c : configs) assigned.emplace(c, false);
  std::vector<detail::ColumnBlock> blocks;
  for (const auto& c : configs) {
    if (assigned[c]) continue;
    std::set<Configuration> orbit;
    for (std::size_t k = 0; k < group.order(); ++k) orbit.insert(group.apply(k, c));
    detail::ColumnBlock block;
    for (const auto& member : orbit) {
      auto it = assigned.find(member);
      if (it == assigned.end()) {
        throw PreconditionError("group maps an admissible configuration outside the domain");
      }
      it->second = true;
      block.members.push_back(member);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

template <class T>
RealizationResult stationary_check_impl(const Domain& domain,
                                        const BasicCorrelationPair<T>& corr,
                                        const FiniteGroup& group,
                                        const SolverOptions& opts) {
  opts.validate();
  validate_correlations(corr, domain.size(), /*require_nonnegative=*/false);
  if (group.sites() != domain.size()) {
    throw DimensionError("group and domain differ in site count");
  }
  if (!group.acts_on(domain)) {
    throw PreconditionError("group does not preserve the domain's distances and caps");
  }
  if (!stationary_impl(corr, group, 1e-12)) {
    throw PreconditionError("correlations are not invariant under the group");
  }
  const auto configs = enumerate_configurations(domain, opts.enumeration_limit);
  return detail::realize(corr, key_orbits(group), config_orbits(configs, group), opts);
}

}  // namespace

FiniteGroup translation_group(std::span<const int> dims) {
  const std::size_t s = site_count(dims);
  std::vector<Permutation> elements;
  for (std::size_t shift = 0; shift < s; ++shift) {
    const auto delta = coords_of(dims, shift);
    Permutation p(s);
    for (std::size_t i = 0; i < s; ++i) {
      auto c = coords_of(dims, i);
      for (std::size_t a = 0; a < c.size(); ++a) c[a] += delta[a];
      p[i] = index_of_coords(dims, c);
    }
    elements.push_back(std::move(p));
  }
  return FiniteGroup(std::move(elements));
}

bool is_stationary(const CorrelationPair& corr, const FiniteGroup& group, double tol) {
  return stationary_impl(corr, group, tol);
}

bool is_stationary(const ExactCorrelationPair& corr, const FiniteGroup& group) {
  return stationary_impl(corr, group, 0.0);
}

Distribution symmetrize(const Distribution& dist, const FiniteGroup& group) {
  return symmetrize_impl(dist, group);
}

ExactDistribution symmetrize(const ExactDistribution& dist, const FiniteGroup& group) {
  return symmetrize_impl(dist, group);
}

RealizationResult check_realizability_stationary(const Domain& domain,
                                                 const CorrelationPair& corr,
                                                 const FiniteGroup& group,
                                                 const SolverOptions& opts) {
  if (opts.arithmetic_mode == ArithmeticMode::kRational) {
    validate_correlations(corr, domain.size(), false);
    return stationary_check_impl(domain, to_rational(corr), group, opts);
  }
  return stationary_check_impl(domain, corr, group, opts);
}

RealizationResult check_realizability_stationary(const Domain& domain,
                                                 const ExactCorrelationPair& corr,
                                                 const FiniteGroup& group,
                                                 const SolverOptions& opts) {
  if (opts.arithmetic_mode == ArithmeticMode::kRational) {
    return stationary_check_impl(domain, corr, group, opts);
  }
  return stationary_check_impl(domain, to_double(corr), group, opts);
}

std::size_t displacement_index(std::span<const int> dims, std::size_t from,
                               std::size_t to) {
  const auto a = coords_of(dims, from);
  auto b = coords_of(dims, to);
  for (std::size_t k = 0; k < b.size(); ++k) b[k] -= a[k];
  return index_of_coords(dims, b);
}

double ReducedPairCorrelation::at(std::span<const int> displacement) const {
  if (displacement.size() != dims.size()) throw DimensionError("displacement rank differs");
  return g2[index_of_coords(dims, std::vector<int>(displacement.begin(), displacement.end()))];
}

ReducedPairCorrelation reduce_pair_correlation(const CorrelationPair& corr,
                                               std::span<const int> dims) {
  const std::size_t s = site_count(dims);
  validate_correlations(corr, s, /*require_nonnegative=*/false);
  if (!is_stationary(corr, translation_group(dims))) {
    throw PreconditionError("correlations are not translation invariant");
  }
  const double rho = corr.rho1[0];
  if (!(rho > 0.0)) {
    throw PreconditionError("pair correlation g2 is undefined at zero density");
  }
  ReducedPairCorrelation out;
  out.rho = rho;
  out.dims.assign(dims.begin(), dims.end());
  out.g2.resize(s);
  for (std::size_t j = 0; j < s; ++j) {
    out.g2[displacement_index(dims, 0, j)] = corr.rho2(0, j) / (rho * rho);
  }
  return out;
}

CorrelationPair expand_pair_correlation(const ReducedPairCorrelation& reduced) {
  const std::size_t s = site_count(reduced.dims);
  if (reduced.g2.size() != s) throw DimensionError("g2 table size differs from torus");
  CorrelationPair corr{std::vector<double>(s, reduced.rho), Matrix<double>(s, s)};
  const double rho_sq = reduced.rho * reduced.rho;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) {
      corr.rho2(i, j) = rho_sq * reduced.g2[displacement_index(reduced.dims, i, j)];
      corr.rho2(j, i) = corr.rho2(i, j);
    }
  }
  return corr;
}

}  // namespace realz
