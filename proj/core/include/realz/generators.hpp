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
#ifndef REALZ_GENERATORS_HPP_
#define REALZ_GENERATORS_HPP_

#include <cstddef>
#include <variant>
#include <vector>

#include "realz/correlation.hpp"
#include "realz/domain.hpp"
#include "realz/enumeration.hpp"

namespace realz {

// Reference processes with exactly computable weights. Every generator is a
// template over the weight type; with Rational parameters the weights are
// exact.

// Independent Bernoulli(p_i) occupancies. Rejects domains with exclusion or
// particle-number caps, and sites with cap 0 unless p_i = 0.
template <class T>
BasicDistribution<T> bernoulli_product(const Domain& domain, const std::vector<T>& p);

template <class T>
struct GibbsDistribution {
  BasicDistribution<T> distribution;
  T partition_function;
};

// p(eta) proportional to z^{N(eta)} over all admissible configurations.
template <class T>
GibbsDistribution<T> hardcore_gibbs(const Domain& domain, const T& activity,
                                    std::size_t limit = kDefaultEnumerationLimit);

// Product of per-site Poisson(lambda) laws conditioned on n_i <= k_i.
template <class T>
BasicDistribution<T> truncated_poisson_product(const Domain& domain, const T& lambda,
                                               std::size_t limit = kDefaultEnumerationLimit);

struct TwoAtomFamily {
  ExactCorrelationPair corr;
  ExactDistribution distribution;
};

// One site with cap K: mass 1/(m(m+1)) at occupancy m+1, the rest at 0, so
// rho1 = 1/m and rho2 = 1. Throws InvalidInputError when K < m + 1.
TwoAtomFamily two_atom_family(int cap, int m);

struct GeneratorSpec {
  struct Bernoulli {
    std::vector<double> p;
  };
  struct HardcoreGibbs {
    double activity = 1.0;
  };
  struct TruncatedPoisson {
    double lambda = 1.0;
  };
  struct TwoAtom {
    int cap = 0;
    int m = 1;
  };
  std::variant<Bernoulli, HardcoreGibbs, TruncatedPoisson, TwoAtom> params;
};

// Dispatches on the spec. For TwoAtom the domain must be the single site
// the family lives on.
Distribution generate(const Domain& domain, const GeneratorSpec& spec);

extern template Distribution bernoulli_product(const Domain&, const std::vector<double>&);
extern template ExactDistribution bernoulli_product(const Domain&, const std::vector<Rational>&);
extern template GibbsDistribution<double> hardcore_gibbs(const Domain&, const double&, std::size_t);
extern template GibbsDistribution<Rational> hardcore_gibbs(const Domain&, const Rational&, std::size_t);
extern template Distribution truncated_poisson_product(const Domain&, const double&, std::size_t);
extern template ExactDistribution truncated_poisson_product(const Domain&, const Rational&, std::size_t);

}  // namespace realz

#endif  // REALZ_GENERATORS_HPP_
