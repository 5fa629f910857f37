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
// Randomized invariants of the solver and the stationary reduction.

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "realz/realz.hpp"

namespace realz {
namespace {

// Nonnegative on every occupancy vector: a sum of squares of affine forms
// plus nonnegative multiples of n_i(n_i - 1).
QuadraticPolynomial random_nonnegative_quadratic(std::size_t s, std::mt19937_64& rng) {
  std::normal_distribution<double> coef(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto p = QuadraticPolynomial::zero(s);
  const int squares = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < squares; ++k) {
    const double a0 = coef(rng);
    std::vector<double> a(s);
    for (auto& x : a) x = coef(rng);
    p.f0 += a0 * a0;
    for (std::size_t i = 0; i < s; ++i) {
      p.f1[i] += 2.0 * a0 * a[i] + a[i] * a[i];
      for (std::size_t j = 0; j < s; ++j) p.f2(i, j) += a[i] * a[j];
    }
  }
  for (std::size_t i = 0; i < s; ++i) p.f2(i, i) += unit(rng);
  return p;
}

// Moves corr along a random nonnegative direction until the LP refuses it.
std::optional<CorrelationPair> push_to_infeasible(const Domain& domain, CorrelationPair corr,
                                                  std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t s = domain.size();
  CorrelationPair dir{std::vector<double>(s), Matrix<double>(s, s)};
  for (auto& x : dir.rho1) x = unit(rng) < 0.5 ? unit(rng) : 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) {
      const bool structural_zero =
          (i == j && domain.cap(i) <= 1) || (i != j && domain.excludes(i, j));
      if (!structural_zero) dir.rho2(i, j) = dir.rho2(j, i) = unit(rng);
    }
  }
  for (double t = 0.05; t < 1e3; t *= 2.0) {
    CorrelationPair moved = corr;
    for (std::size_t i = 0; i < s; ++i) moved.rho1[i] += t * dir.rho1[i];
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) moved.rho2(i, j) += t * dir.rho2(i, j);
    }
    if (!check_realizability(domain, moved).feasible()) return moved;
  }
  return std::nullopt;
}

TEST_CASE("feasible soundness on random distributions") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Domain domain = testing::random_domain(rng, 4, 2);
    const auto corr = correlations_of(testing::random_distribution(domain, rng));
    const auto r = check_realizability(domain, corr);
    REQUIRE(r.feasible());
    CHECK_NOTHROW(validate_distribution(r.witness(), domain));
    CHECK(max_abs_difference(correlations_of(r.witness()), corr) <= 1e-9);
  }
}

TEST_CASE("infeasible soundness on pushed instances") {
  std::mt19937_64 rng(77);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Domain domain = testing::random_domain(rng, 4, 2);
    const auto corr = correlations_of(testing::random_distribution(domain, rng));
    const auto bad = push_to_infeasible(domain, corr, rng);
    if (!bad) continue;
    ++found;
    const auto r = check_realizability(domain, *bad);
    REQUIRE_FALSE(r.feasible());
    CHECK(verify_certificate(domain, r.certificate(), *bad, 1e-9));
  }
  CHECK(found >= 30);
}

TEST_CASE("feasible instances admit no random certificate") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 5; ++trial) {
    const Domain domain = testing::random_domain(rng, 4, 2);
    const auto corr = correlations_of(testing::random_distribution(domain, rng));
    REQUIRE(check_realizability(domain, corr).feasible());
    for (int k = 0; k < 100; ++k) {
      const auto p = random_nonnegative_quadratic(domain.size(), rng);
      CHECK_FALSE(verify_certificate(domain, p, corr, 1e-9));
    }
  }
}

TEST_CASE("float and exact verdicts agree on small configuration spaces") {
  std::mt19937_64 rng(5150);
  SolverOptions exact;
  exact.arithmetic_mode = ArithmeticMode::kRational;
  int checked = 0;
  while (checked < 30) {
    const Domain domain = testing::random_domain(rng, 3, 2);
    if (count_configurations(domain) > 8) continue;
    auto corr = correlations_of(testing::random_exact_distribution(domain, rng));
    if (checked % 2 == 1) corr.rho1[0] += Rational(static_cast<int>(rng() % 7) + 1, 4);
    const bool oracle = testing::oracle_realizable(domain, corr);
    CHECK(check_realizability(domain, to_double(corr)).feasible() == oracle);
    CHECK(check_realizability(domain, corr, exact).feasible() == oracle);
    ++checked;
  }
}

TEST_CASE("minimal third moment is nonincreasing in the cap") {
  for (int m = 1; m <= 4; ++m) {
    const CorrelationPair corr{{1.0 / m}, Matrix<double>(1, 1, 1.0)};
    double previous = INFINITY;
    for (int k = m + 1; k <= m + 5; ++k) {
      const auto r = minimal_third_moment(Domain::single_site(k), corr);
      REQUIRE(r.finite());
      CHECK(r.r_star() <= previous + 1e-9);
      previous = r.r_star();
    }
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Domain base = Domain::uniform(2, 1);
    const auto corr = correlations_of(testing::random_distribution(base, rng));
    double previous = INFINITY;
    for (int k = 1; k <= 4; ++k) {
      const auto r = minimal_third_moment(base.with_cap(k), corr);
      REQUIRE(r.finite());
      CHECK(r.r_star() <= previous + 1e-9);
      previous = r.r_star();
    }
  }
}

TEST_CASE("stationary and full LP verdicts agree") {
  std::mt19937_64 rng(606);
  const std::vector<std::vector<int>> shapes{{3}, {4}, {2, 2}, {5}};
  for (int trial = 0; trial < 24; ++trial) {
    const auto& dims = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const int cap = 1 + static_cast<int>(rng() % 2);
    const Domain domain =
        trial % 3 == 0 ? Domain::torus(dims, 1, 1.5) : Domain::torus(dims, cap);
    const auto g = translation_group(dims);
    auto corr = correlations_of(symmetrize(testing::random_distribution(domain, rng), g));
    if (trial % 2 == 1) {
      // Stationary push: raise every off-diagonal entry together.
      for (std::size_t i = 0; i < domain.size(); ++i) {
        for (std::size_t j = 0; j < domain.size(); ++j) {
          if (i != j && !domain.excludes(i, j)) corr.rho2(i, j) += 0.8;
        }
      }
    }
    const auto full = check_realizability(domain, corr);
    const auto reduced = check_realizability_stationary(domain, corr, g);
    CHECK(full.feasible() == reduced.feasible());
    if (reduced.feasible()) {
      CHECK(max_abs_difference(correlations_of(reduced.witness()), corr) <= 1e-9);
      const auto sym = symmetrize(full.witness(), g);
      CHECK(max_abs_difference(correlations_of(sym), corr) <= 1e-9);
    } else {
      CHECK(verify_certificate(domain, reduced.certificate(), corr, 1e-9));
    }
  }
}

TEST_CASE("reduce then expand is the identity on stationary correlations") {
  std::mt19937_64 rng(31337);
  const std::vector<int> dims{2, 3};
  const Domain domain = Domain::torus(dims, 2);
  const auto g = translation_group(dims);
  for (int trial = 0; trial < 10; ++trial) {
    const auto corr = correlations_of(symmetrize(testing::random_distribution(domain, rng), g));
    if (corr.rho1[0] <= 0.0) continue;
    const auto back = expand_pair_correlation(reduce_pair_correlation(corr, dims));
    CHECK(max_abs_difference(back, corr) <= 1e-12);
  }
}

}  // namespace
}  // namespace realz
