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
#ifndef REALZ_CORRELATION_HPP_
#define REALZ_CORRELATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "realz/domain.hpp"
#include "realz/numeric.hpp"

namespace realz {

// Prescribed first and second correlation functions on S sites.
// rho2(i, j) = E[n_i n_j] for i != j and rho2(i, i) = E[n_i (n_i - 1)].
template <class T>
struct BasicCorrelationPair {
  std::vector<T> rho1;
  Matrix<T> rho2;

  std::size_t size() const { return rho1.size(); }
};

using CorrelationPair = BasicCorrelationPair<double>;
using ExactCorrelationPair = BasicCorrelationPair<Rational>;

// Throws DimensionError / InvalidInputError unless rho2 is S x S, symmetric
// and every entry is finite. Negativity is checked only when
// `require_nonnegative` is set.
void validate_correlations(const CorrelationPair& corr, std::size_t sites,
                           bool require_nonnegative = true);
void validate_correlations(const ExactCorrelationPair& corr, std::size_t sites,
                           bool require_nonnegative = true);

CorrelationPair to_double(const ExactCorrelationPair& corr);
ExactCorrelationPair to_rational(const CorrelationPair& corr);

// P(eta) = f0 + <f1, eta> + <f2, eta^(2)>, f2 symmetric.
template <class T>
struct BasicQuadraticPolynomial {
  T f0 = T(0);
  std::vector<T> f1;
  Matrix<T> f2;

  static BasicQuadraticPolynomial zero(std::size_t sites) {
    return {T(0), std::vector<T>(sites, T(0)), Matrix<T>(sites, sites, T(0))};
  }
  std::size_t size() const { return f1.size(); }

  T max_abs_coefficient() const {
    auto mag = [](const T& x) { return x < 0 ? T(-x) : x; };
    T m = mag(f0);
    for (const T& x : f1) m = std::max(m, mag(x));
    for (const T& x : f2.data()) m = std::max(m, mag(x));
    return m;
  }

  BasicQuadraticPolynomial scaled(const T& factor) const {
    BasicQuadraticPolynomial out = *this;
    out.f0 *= factor;
    for (T& x : out.f1) x *= factor;
    out.f2 = f2.template map<T>([&factor](const T& x) { return T(x * factor); });
    return out;
  }
};

using QuadraticPolynomial = BasicQuadraticPolynomial<double>;
using ExactQuadraticPolynomial = BasicQuadraticPolynomial<Rational>;

QuadraticPolynomial to_double(const ExactQuadraticPolynomial& p);

// Finitely supported probability measure on configurations.
template <class T>
struct BasicDistribution {
  struct Atom {
    Configuration config;
    T weight;
  };
  std::vector<Atom> atoms;

  std::size_t size() const { return atoms.size(); }
  std::size_t sites() const {
    return atoms.empty() ? 0 : atoms.front().config.size();
  }
};

using Distribution = BasicDistribution<double>;
using ExactDistribution = BasicDistribution<Rational>;

inline constexpr double kWeightSumTolerance = 1e-9;

// Weights nonnegative, summing to one (exactly for rationals), configurations
// distinct and of equal length. When a domain is given every configuration
// must also be admissible.
void validate_distribution(const Distribution& dist);
void validate_distribution(const ExactDistribution& dist);
void validate_distribution(const Distribution& dist, const Domain& domain);
void validate_distribution(const ExactDistribution& dist, const Domain& domain);

Distribution to_double(const ExactDistribution& dist);

// Sorts atoms lexicographically and merges duplicates.
template <class T>
BasicDistribution<T> canonicalize(BasicDistribution<T> dist);

extern template Distribution canonicalize(Distribution);
extern template ExactDistribution canonicalize(ExactDistribution);

// Entry (i, j) = n_i n_j off the diagonal and n_i (n_i - 1) on it.
Matrix<std::int64_t> factorial_power2(const Configuration& config);

template <class T>
T eval_quadratic(const BasicQuadraticPolynomial<T>& p,
                 const Configuration& config) {
  const std::size_t s = config.size();
  if (p.f1.size() != s || p.f2.rows() != s || p.f2.cols() != s) {
    throw DimensionError("polynomial and configuration sizes differ");
  }
  T value = p.f0;
  for (std::size_t i = 0; i < s; ++i) {
    const int ni = config[i];
    if (ni == 0) continue;
    value += p.f1[i] * ni;
    if (ni > 1) value += p.f2(i, i) * (ni * (ni - 1));
    for (std::size_t j = 0; j < s; ++j) {
      if (j != i && config[j] != 0) value += p.f2(i, j) * (ni * config[j]);
    }
  }
  return value;
}

// Third factorial sum H_3 with unit weights: N (N - 1) (N - 2), N = total.
std::int64_t h3(const Configuration& config);

// n-th factorial sum of chi over distinct particles, n in {1, 2, 3}.
double h_moment(const Configuration& config, std::span<const double> chi,
                int order);

template <class T>
BasicCorrelationPair<T> correlations_of(const BasicDistribution<T>& dist);

extern template CorrelationPair correlations_of(const Distribution&);
extern template ExactCorrelationPair correlations_of(const ExactDistribution&);

// f0 + sum_i f1_i rho1_i + sum_ij f2_ij rho2_ij.
template <class T>
T pairing(const BasicQuadraticPolynomial<T>& p,
          const BasicCorrelationPair<T>& corr) {
  const std::size_t s = corr.size();
  if (p.f1.size() != s || p.f2.rows() != s || corr.rho2.rows() != s) {
    throw DimensionError("polynomial and correlation sizes differ");
  }
  T value = p.f0;
  for (std::size_t i = 0; i < s; ++i) {
    value += p.f1[i] * corr.rho1[i];
    for (std::size_t j = 0; j < s; ++j) value += p.f2(i, j) * corr.rho2(i, j);
  }
  return value;
}

// Largest entrywise deviation between two correlation pairs.
double max_abs_difference(const CorrelationPair& a, const CorrelationPair& b);

}  // namespace realz

#endif  // REALZ_CORRELATION_HPP_
