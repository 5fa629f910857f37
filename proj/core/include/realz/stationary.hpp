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
#ifndef REALZ_STATIONARY_HPP_
#define REALZ_STATIONARY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "realz/correlation.hpp"
#include "realz/domain.hpp"
#include "realz/solver.hpp"

namespace realz {

using Permutation = std::vector<std::size_t>;

// A finite group of site permutations, stored as its full element list.
class FiniteGroup {
 public:
  // Validates that every element is a permutation of the same size and that
  // the set contains the identity and is closed under composition.
  explicit FiniteGroup(std::vector<Permutation> elements);

  static FiniteGroup trivial(std::size_t sites);

  std::size_t order() const { return elements_.size(); }
  std::size_t sites() const { return elements_.front().size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t k) const { return elements_[k]; }
  std::size_t identity_index() const { return identity_; }

  // Index of a∘b (apply b first).
  std::size_t compose(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t k) const;

  // True when every element preserves distances and caps.
  bool acts_on(const Domain& domain) const;

  // (g eta)_{g(i)} = eta_i.
  Configuration apply(std::size_t k, const Configuration& config) const;

 private:
  std::size_t index_of(const Permutation& p) const;

  std::vector<Permutation> elements_;
  std::size_t identity_ = 0;
};

// All translations of a discrete torus with the given side lengths, sites
// numbered row-major as in Domain::torus.
FiniteGroup translation_group(std::span<const int> dims);

bool is_stationary(const CorrelationPair& corr, const FiniteGroup& group,
                   double tol = 1e-12);
bool is_stationary(const ExactCorrelationPair& corr, const FiniteGroup& group);

// Uniform average of the pushed-forward distributions g mu over the group.
Distribution symmetrize(const Distribution& dist, const FiniteGroup& group);
ExactDistribution symmetrize(const ExactDistribution& dist, const FiniteGroup& group);

// Realizability restricted to group-invariant distributions, solved over
// orbit representatives. Throws PreconditionError when corr is not
// stationary or the group does not act on the domain.
RealizationResult check_realizability_stationary(const Domain& domain,
                                                 const CorrelationPair& corr,
                                                 const FiniteGroup& group,
                                                 const SolverOptions& opts = {});
RealizationResult check_realizability_stationary(const Domain& domain,
                                                 const ExactCorrelationPair& corr,
                                                 const FiniteGroup& group,
                                                 const SolverOptions& opts = {});

// rho2(i, j) = rho^2 g2(displacement(j - i)) on a discrete torus. g2 is
// indexed by the displacement's row-major site index, components taken
// modulo the side lengths.
struct ReducedPairCorrelation {
  double rho = 0.0;
  std::vector<int> dims;
  std::vector<double> g2;

  double at(std::span<const int> displacement) const;
};

std::size_t displacement_index(std::span<const int> dims, std::size_t from,
                               std::size_t to);

ReducedPairCorrelation reduce_pair_correlation(const CorrelationPair& corr,
                                               std::span<const int> dims);
CorrelationPair expand_pair_correlation(const ReducedPairCorrelation& reduced);

}  // namespace realz

#endif  // REALZ_STATIONARY_HPP_
