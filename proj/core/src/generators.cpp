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
#include "realz/generators.hpp"

#include <string>
#include <type_traits>
#include <utility>

#include "realz/error.hpp"

namespace realz {
namespace {

template <class T>
T power(const T& base, int exponent) {
  T out = T(1);
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

void require_product_domain(const Domain& domain, const char* what) {
  if (domain.has_exclusion() || domain.total_cap() || domain.total_exact()) {
    throw InvalidInputError(std::string(what) +
                            " needs a domain without exclusion or particle-number caps");
  }
}

}  // namespace

template <class T>
BasicDistribution<T> bernoulli_product(const Domain& domain, const std::vector<T>& p) {
  require_product_domain(domain, "bernoulli_product");
  const std::size_t s = domain.size();
  if (p.size() != s) throw DimensionError("one probability per site is required");
  for (std::size_t i = 0; i < s; ++i) {
    if (p[i] < 0 || p[i] > 1) throw InvalidInputError("probabilities must lie in [0, 1]");
    if (domain.cap(i) < 1 && p[i] != 0) {
      throw InvalidInputError("site " + std::to_string(i) + " has cap 0");
    }
  }
  BasicDistribution<T> dist;
  Configuration c{std::vector<int>(s, 0)};
  // Count in binary with site 0 as the most significant digit so atoms come
  // out in lexicographic order.
  const std::size_t total = std::size_t{1} << s;
  for (std::size_t mask = 0; mask < total; ++mask) {
    T w = T(1);
    for (std::size_t i = 0; i < s; ++i) {
      const bool on = (mask >> (s - 1 - i)) & 1U;
      c.occupancy[i] = on ? 1 : 0;
      w *= on ? p[i] : T(1 - p[i]);
    }
    if (w != 0) dist.atoms.push_back({c, std::move(w)});
  }
  return dist;
}

template <class T>
GibbsDistribution<T> hardcore_gibbs(const Domain& domain, const T& activity,
                                    std::size_t limit) {
  if (!(activity > 0)) throw InvalidInputError("activity must be positive");
  GibbsDistribution<T> out;
  out.partition_function = T(0);
  for_each_configuration(
      domain,
      [&](const Configuration& c) {
        T w = power(activity, c.total());
        out.partition_function += w;
        out.distribution.atoms.push_back({c, std::move(w)});
      },
      limit);
  if (out.distribution.atoms.empty()) {
    throw InvalidInputError("domain has no admissible configuration");
  }
  for (auto& atom : out.distribution.atoms) atom.weight /= out.partition_function;
  return out;
}

template <class T>
BasicDistribution<T> truncated_poisson_product(const Domain& domain, const T& lambda,
                                               std::size_t limit) {
  require_product_domain(domain, "truncated_poisson_product");
  if (!(lambda > 0)) throw InvalidInputError("lambda must be positive");
  const std::size_t s = domain.size();
  // Per-site law lambda^n / n!, normalized over n <= k_i.
  std::vector<std::vector<T>> site_law(s);
  for (std::size_t i = 0; i < s; ++i) {
    T term = T(1);
    T norm = T(0);
    for (int n = 0; n <= domain.cap(i); ++n) {
      if (n > 0) term = T(term * lambda / n);
      site_law[i].push_back(term);
      norm += term;
    }
    for (auto& w : site_law[i]) w /= norm;
  }
  BasicDistribution<T> dist;
  for_each_configuration(
      domain,
      [&](const Configuration& c) {
        T w = T(1);
        for (std::size_t i = 0; i < s; ++i) w *= site_law[i][static_cast<std::size_t>(c[i])];
        dist.atoms.push_back({c, std::move(w)});
      },
      limit);
  return dist;
}

TwoAtomFamily two_atom_family(int cap, int m) {
  if (m < 1) throw InvalidInputError("two_atom_family needs m >= 1");
  if (cap < m + 1) {
    throw InvalidInputError("two_atom_family needs cap >= m + 1 = " + std::to_string(m + 1) +
                            ", got " + std::to_string(cap));
  }
  const Rational top(1, static_cast<long long>(m) * (m + 1));
  TwoAtomFamily out;
  out.distribution.atoms.push_back({Configuration{{0}}, Rational(1 - top)});
  out.distribution.atoms.push_back({Configuration{{m + 1}}, top});
  out.corr = correlations_of(out.distribution);
  return out;
}

Distribution generate(const Domain& domain, const GeneratorSpec& spec) {
  return std::visit(
      [&domain](const auto& params) -> Distribution {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, GeneratorSpec::Bernoulli>) {
          return bernoulli_product(domain, params.p);
        } else if constexpr (std::is_same_v<P, GeneratorSpec::HardcoreGibbs>) {
          return hardcore_gibbs(domain, params.activity).distribution;
        } else if constexpr (std::is_same_v<P, GeneratorSpec::TruncatedPoisson>) {
          return truncated_poisson_product(domain, params.lambda);
        } else {
          if (domain.size() != 1 || domain.cap(0) != params.cap) {
            throw InvalidInputError("two_atom family lives on one site with the given cap");
          }
          return to_double(two_atom_family(params.cap, params.m).distribution);
        }
      },
      spec.params);
}

template Distribution bernoulli_product(const Domain&, const std::vector<double>&);
template ExactDistribution bernoulli_product(const Domain&, const std::vector<Rational>&);
template GibbsDistribution<double> hardcore_gibbs(const Domain&, const double&, std::size_t);
template GibbsDistribution<Rational> hardcore_gibbs(const Domain&, const Rational&, std::size_t);
template Distribution truncated_poisson_product(const Domain&, const double&, std::size_t);
template ExactDistribution truncated_poisson_product(const Domain&, const Rational&, std::size_t);

}  // namespace realz
