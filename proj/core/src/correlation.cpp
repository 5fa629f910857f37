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
#include "realz/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace realz {
namespace {

template <class T>
bool is_finite(const T& x) {
  if constexpr (kIsExact<T>) {
    return true;
  } else {
    return std::isfinite(x);
  }
}

constexpr double kSymmetryTolerance = 1e-12;

template <class T>
void validate_impl(const BasicCorrelationPair<T>& corr, std::size_t sites,
                   bool require_nonnegative) {
  if (corr.rho1.size() != sites) {
    throw DimensionError("rho1 has " + std::to_string(corr.rho1.size()) +
                         " entries, expected " + std::to_string(sites));
  }
  if (corr.rho2.rows() != sites || corr.rho2.cols() != sites) {
    throw DimensionError("rho2 must be " + std::to_string(sites) + "x" +
                         std::to_string(sites));
  }
  for (const auto& x : corr.rho1) {
    if (!is_finite(x)) throw InvalidInputError("rho1 has a non-finite entry");
    if (require_nonnegative && x < 0) {
      throw InvalidInputError("rho1 has a negative entry");
    }
  }
  for (const auto& x : corr.rho2.data()) {
    if (!is_finite(x)) throw InvalidInputError("rho2 has a non-finite entry");
    if (require_nonnegative && x < 0) {
      throw InvalidInputError("rho2 has a negative entry");
    }
  }
  if (!is_symmetric(corr.rho2, kSymmetryTolerance)) throw InvalidInputError("rho2 is not symmetric");
}

template <class T>
void validate_distribution_impl(const BasicDistribution<T>& dist) {
  if (dist.atoms.empty()) throw InvalidInputError("distribution has no atoms");
  const std::size_t sites = dist.sites();
  T sum = 0;
  std::set<Configuration> seen;
  for (const auto& atom : dist.atoms) {
    if (atom.config.size() != sites) {
      throw DimensionError("distribution atoms have different site counts");
    }
    if (!is_finite(atom.weight) || atom.weight < 0) {
      throw InvalidInputError("distribution weights must be nonnegative");
    }
    if (!seen.insert(atom.config).second) {
      throw InvalidInputError("distribution has a repeated configuration");
    }
    sum += atom.weight;
  }
  if constexpr (kIsExact<T>) {
    if (sum != 1) throw InvalidInputError("distribution weights do not sum to 1");
  } else {
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
      throw InvalidInputError("distribution weights do not sum to 1");
    }
  }
}

template <class T>
void check_support(const BasicDistribution<T>& dist, const Domain& domain) {
  for (const auto& atom : dist.atoms) {
    if (!is_admissible(domain, atom.config)) {
      throw InvalidInputError("distribution charges an inadmissible configuration");
    }
  }
}

}  // namespace

void validate_correlations(const CorrelationPair& corr, std::size_t sites,
                           bool require_nonnegative) {
  validate_impl(corr, sites, require_nonnegative);
}

void validate_correlations(const ExactCorrelationPair& corr, std::size_t sites,
                           bool require_nonnegative) {
  validate_impl(corr, sites, require_nonnegative);
}

CorrelationPair to_double(const ExactCorrelationPair& corr) {
  return {to_double(corr.rho1), to_double(corr.rho2)};
}

ExactCorrelationPair to_rational(const CorrelationPair& corr) {
  return {to_rational(corr.rho1), to_rational(corr.rho2)};
}

QuadraticPolynomial to_double(const ExactQuadraticPolynomial& p) {
  return {to_double(p.f0), to_double(p.f1), to_double(p.f2)};
}

void validate_distribution(const Distribution& dist) {
  validate_distribution_impl(dist);
}
void validate_distribution(const ExactDistribution& dist) {
  validate_distribution_impl(dist);
}
void validate_distribution(const Distribution& dist, const Domain& domain) {
  validate_distribution_impl(dist);
  check_support(dist, domain);
}
void validate_distribution(const ExactDistribution& dist, const Domain& domain) {
  validate_distribution_impl(dist);
  check_support(dist, domain);
}

Distribution to_double(const ExactDistribution& dist) {
  Distribution out;
  out.atoms.reserve(dist.atoms.size());
  for (const auto& atom : dist.atoms) {
    out.atoms.push_back({atom.config, to_double(atom.weight)});
  }
  return out;
}

template <class T>
BasicDistribution<T> canonicalize(BasicDistribution<T> dist) {
  std::sort(dist.atoms.begin(), dist.atoms.end(),
            [](const auto& a, const auto& b) { return a.config < b.config; });
  BasicDistribution<T> out;
  for (auto& atom : dist.atoms) {
    if (!out.atoms.empty() && out.atoms.back().config == atom.config) {
      out.atoms.back().weight += atom.weight;
    } else {
      out.atoms.push_back(std::move(atom));
    }
  }
  return out;
}

template Distribution canonicalize(Distribution);
template ExactDistribution canonicalize(ExactDistribution);

Matrix<std::int64_t> factorial_power2(const Configuration& config) {
  const std::size_t s = config.size();
  Matrix<std::int64_t> out(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    const std::int64_t ni = config[i];
    for (std::size_t j = 0; j < s; ++j) {
      out(i, j) = i == j ? ni * (ni - 1) : ni * config[j];
    }
  }
  return out;
}

std::int64_t h3(const Configuration& config) {
  const std::int64_t n = config.total();
  return n * (n - 1) * (n - 2);
}

double h_moment(const Configuration& config, std::span<const double> chi,
                int order) {
  if (order < 1 || order > 3) {
    throw InvalidInputError("h_moment supports orders 1, 2 and 3");
  }
  if (chi.size() != config.size()) {
    throw DimensionError("chi and configuration sizes differ");
  }
  // Power sums over particles; the factorial sums follow from Newton's
  // identities for distinct-index products.
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (!(chi[i] > 0.0)) throw InvalidInputError("chi must be strictly positive");
    const double n = config[i];
    s1 += n * chi[i];
    s2 += n * chi[i] * chi[i];
    s3 += n * chi[i] * chi[i] * chi[i];
  }
  switch (order) {
    case 1:
      return s1;
    case 2:
      return s1 * s1 - s2;
    default:
      return s1 * s1 * s1 - 3.0 * s1 * s2 + 2.0 * s3;
  }
}

template <class T>
BasicCorrelationPair<T> correlations_of(const BasicDistribution<T>& dist) {
  validate_distribution(dist);
  const std::size_t s = dist.sites();
  BasicCorrelationPair<T> corr{std::vector<T>(s, T(0)), Matrix<T>(s, s, T(0))};
  for (const auto& atom : dist.atoms) {
    if (atom.weight == 0) continue;
    for (std::size_t i = 0; i < s; ++i) {
      const int ni = atom.config[i];
      if (ni == 0) continue;
      corr.rho1[i] += atom.weight * ni;
      corr.rho2(i, i) += atom.weight * (ni * (ni - 1));
      for (std::size_t j = i + 1; j < s; ++j) {
        if (atom.config[j] == 0) continue;
        const T contribution = atom.weight * (ni * atom.config[j]);
        corr.rho2(i, j) += contribution;
        corr.rho2(j, i) += contribution;
      }
    }
  }
  return corr;
}

template CorrelationPair correlations_of(const Distribution&);
template ExactCorrelationPair correlations_of(const ExactDistribution&);

double max_abs_difference(const CorrelationPair& a, const CorrelationPair& b) {
  if (a.size() != b.size() || a.rho2.rows() != b.rho2.rows()) {
    throw DimensionError("correlation pairs have different sizes");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a.rho1[i] - b.rho1[i]));
  }
  for (std::size_t k = 0; k < a.rho2.data().size(); ++k) {
    m = std::max(m, std::abs(a.rho2.data()[k] - b.rho2.data()[k]));
  }
  return m;
}

}  // namespace realz
