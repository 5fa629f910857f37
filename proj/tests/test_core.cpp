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
#include <charconv>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "realz/realz.hpp"

namespace realz {
namespace {

Domain two_sites_apart(double distance, double diameter) {
  DomainSpec spec;
  spec.distance = Matrix<double>::from_rows({{0.0, distance}, {distance, 0.0}});
  spec.caps = {1, 1};
  spec.exclusion_diameter = diameter;
  return Domain(std::move(spec));
}

TEST_CASE("exclusion is strict in the distance") {
  const Domain d = two_sites_apart(1.0, 2.0);
  CHECK_FALSE(is_admissible(d, {{1, 1}}));
  CHECK(is_admissible(d, {{1, 0}}));
  CHECK(is_admissible(d, {{0, 0}}));
  const Domain touching = two_sites_apart(2.0, 2.0);
  CHECK(is_admissible(touching, {{1, 1}}));
}

TEST_CASE("occupancy caps") {
  const Domain d = Domain::single_site(3);
  CHECK_FALSE(is_admissible(d, {{4}}));
  CHECK(is_admissible(d, {{3}}));
  CHECK_THROWS_AS(is_admissible(d, {{1, 0}}), DimensionError);
}

TEST_CASE("positive exclusion forbids stacking") {
  DomainSpec spec;
  spec.distance = Matrix<double>(1, 1);
  spec.caps = {5};
  spec.exclusion_diameter = 0.5;
  const Domain d(std::move(spec));
  CHECK(d.cap(0) == 1);
  CHECK_FALSE(is_admissible(d, {{2}}));
}

TEST_CASE("total caps") {
  DomainSpec spec;
  spec.distance = Matrix<double>(3, 3, 1.0);
  for (int i = 0; i < 3; ++i) spec.distance(i, i) = 0.0;
  spec.caps = {2, 2, 2};
  spec.total_cap = 3;
  const Domain capped(spec);
  CHECK(is_admissible(capped, {{2, 1, 0}}));
  CHECK_FALSE(is_admissible(capped, {{2, 1, 1}}));

  spec.total_cap.reset();
  spec.total_exact = 2;
  const Domain exact(spec);
  CHECK(is_admissible(exact, {{1, 1, 0}}));
  CHECK_FALSE(is_admissible(exact, {{1, 0, 0}}));
}

TEST_CASE("domain validation") {
  DomainSpec asym;
  asym.distance = Matrix<double>::from_rows({{0.0, 1.0}, {2.0, 0.0}});
  asym.caps = {1, 1};
  CHECK_THROWS_AS(Domain{asym}, InvalidInputError);

  DomainSpec diag;
  diag.distance = Matrix<double>::from_rows({{1.0}});
  diag.caps = {1};
  CHECK_THROWS_AS(Domain{diag}, InvalidInputError);

  DomainSpec both;
  both.distance = Matrix<double>(1, 1);
  both.caps = {2};
  both.total_cap = 1;
  both.total_exact = 1;
  CHECK_THROWS_AS(Domain{both}, InvalidInputError);

  DomainSpec unbounded;
  unbounded.distance = Matrix<double>(2, 2);
  unbounded.caps = {1, kUnboundedCap};
  try {
    Domain{unbounded};
    FAIL("expected UnboundedSiteError");
  } catch (const UnboundedSiteError& e) {
    CHECK(e.site() == 1);
  }

  DomainSpec bounded_by_total = unbounded;
  bounded_by_total.total_cap = 4;
  CHECK(Domain(bounded_by_total).cap(1) == 4);

  DomainSpec mismatch;
  mismatch.distance = Matrix<double>(2, 2);
  mismatch.caps = {1};
  CHECK_THROWS_AS(Domain{mismatch}, DimensionError);
}

TEST_CASE("torus domain") {
  const std::vector<int> dims{2, 3};
  const Domain t = Domain::torus(dims, 1);
  REQUIRE(t.size() == 6);
  CHECK(t.labels()[4] == "(1,1)");
  CHECK(t.distance(0, 2) == doctest::Approx(1.0));  // (0,0)-(0,2) wraps
  CHECK(t.distance(0, 5) == doctest::Approx(2.0));
  CHECK(t.is_lattice_gas());
}

TEST_CASE("factorial_power2") {
  CHECK(factorial_power2({{2}}) == Matrix<std::int64_t>::from_rows({{2}}));
  CHECK(factorial_power2({{1, 1}}) == Matrix<std::int64_t>::from_rows({{0, 1}, {1, 0}}));
  CHECK(factorial_power2({{3, 0}}) == Matrix<std::int64_t>::from_rows({{6, 0}, {0, 0}}));
  const Configuration c{{4, 1, 2}};
  const auto m = factorial_power2(c);
  for (std::size_t i = 0; i < 3; ++i) CHECK(m(i, i) == c[i] * c[i] - c[i]);
  CHECK(is_symmetric(m));
}

TEST_CASE("eval_quadratic") {
  auto p = QuadraticPolynomial::zero(2);
  p.f0 = 1.0;
  CHECK(eval_quadratic(p, {{3, 1}}) == 1.0);

  auto lin = QuadraticPolynomial::zero(2);
  lin.f1 = {1.0, 1.0};
  CHECK(eval_quadratic(lin, {{2, 3}}) == 5.0);

  // Ordered pairs of distinct labelled particles: (a,b),(b,a) on site 0 and
  // a,b paired with c on site 1 in both orders.
  QuadraticPolynomial ones{0.0, {0.0, 0.0}, Matrix<double>(2, 2, 1.0)};
  CHECK(eval_quadratic(ones, {{2, 1}}) == 6.0);

  CHECK_THROWS_AS(eval_quadratic(ones, {{1}}), DimensionError);
}

TEST_CASE("h_moment matches ordered distinct tuples") {
  const std::vector<double> one1{1.0};
  CHECK(h_moment({{4}}, one1, 3) == 24.0);
  const std::vector<double> one3{1.0, 1.0, 1.0};
  CHECK(h_moment({{1, 1, 1}}, one3, 3) == 6.0);
  const std::vector<double> two{2.0};
  CHECK(h_moment({{3}}, two, 2) == 24.0);

  CHECK_THROWS_AS(h_moment({{1}}, one1, 4), InvalidInputError);
  CHECK_THROWS_AS(h_moment({{1}}, one1, 0), InvalidInputError);
  const std::vector<double> zero{0.0};
  CHECK_THROWS_AS(h_moment({{1}}, zero, 1), InvalidInputError);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> occ(0, 3);
  std::uniform_real_distribution<double> weight(0.2, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    Configuration c{{occ(rng), occ(rng), occ(rng)}};
    std::vector<double> chi{weight(rng), weight(rng), weight(rng)};
    for (int n = 1; n <= 3; ++n) {
      const double expect = testing::brute_force_h_moment(c, chi, n);
      CHECK(h_moment(c, chi, n) == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(h3(c) == static_cast<std::int64_t>(testing::brute_force_h_moment(c, one3, 3)));
  }
}

TEST_CASE("correlations_of") {
  Distribution empty{{{Configuration{{0, 0}}, 1.0}}};
  const auto c0 = correlations_of(empty);
  CHECK(c0.rho1 == std::vector<double>{0.0, 0.0});
  CHECK(c0.rho2 == Matrix<double>(2, 2));

  Distribution full{{{Configuration{{1, 1}}, 1.0}}};
  const auto c1 = correlations_of(full);
  CHECK(c1.rho1 == std::vector<double>{1.0, 1.0});
  CHECK(c1.rho2 == Matrix<double>::from_rows({{0.0, 1.0}, {1.0, 0.0}}));

  ExactDistribution two_atom{{{Configuration{{0}}, Rational(11, 12)},
                              {Configuration{{4}}, Rational(1, 12)}}};
  const auto c2 = correlations_of(two_atom);
  CHECK(c2.rho1[0] == Rational(1, 3));
  CHECK(c2.rho2(0, 0) == Rational(1));
}

TEST_CASE("distribution validation") {
  Distribution bad_sum{{{Configuration{{0}}, 0.5}}};
  CHECK_THROWS_AS(validate_distribution(bad_sum), InvalidInputError);
  Distribution negative{{{Configuration{{0}}, 1.5}, {Configuration{{1}}, -0.5}}};
  CHECK_THROWS_AS(validate_distribution(negative), InvalidInputError);
  Distribution duplicate{{{Configuration{{1}}, 0.5}, {Configuration{{1}}, 0.5}}};
  CHECK_THROWS_AS(validate_distribution(duplicate), InvalidInputError);
  Distribution inadmissible{{{Configuration{{3}}, 1.0}}};
  CHECK_THROWS_AS(validate_distribution(inadmissible, Domain::single_site(2)),
                  InvalidInputError);
  Distribution ragged{{{Configuration{{1}}, 0.5}, {Configuration{{1, 0}}, 0.5}}};
  CHECK_THROWS(validate_distribution(ragged));
  Distribution within{{{Configuration{{0}}, 1.0 + 5e-10}}};
  CHECK_NOTHROW(validate_distribution(within));
  CHECK_THROWS_AS(correlations_of(bad_sum), InvalidInputError);
}

TEST_CASE("pairing") {
  CorrelationPair corr{{0.4}, Matrix<double>::from_rows({{1.0}})};
  QuadraticPolynomial constant{1.0, {0.0}, Matrix<double>(1, 1)};
  CHECK(pairing(constant, corr) == 1.0);
  QuadraticPolynomial quad{0.0, {0.0}, Matrix<double>(1, 1, 1.0)};
  CHECK(pairing(quad, corr) == 1.0);
  QuadraticPolynomial lin{-1.0, {1.0}, Matrix<double>(1, 1)};
  CHECK(pairing(lin, corr) == doctest::Approx(-0.6));
  CorrelationPair wrong{{0.1, 0.2}, Matrix<double>(2, 2)};
  CHECK_THROWS_AS(pairing(lin, wrong), DimensionError);
}

TEST_CASE("pairing agrees with the expectation of the polynomial") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> coef(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const Domain domain = testing::random_domain(rng, 4, 2);
    const auto mu = testing::random_distribution(domain, rng);
    const std::size_t s = domain.size();
    auto p = QuadraticPolynomial::zero(s);
    p.f0 = coef(rng);
    for (auto& x : p.f1) x = coef(rng);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i; j < s; ++j) p.f2(i, j) = p.f2(j, i) = coef(rng);
    }
    double expectation = 0.0;
    double magnitude = 0.0;
    for (const auto& atom : mu.atoms) {
      const double v = eval_quadratic(p, atom.config);
      expectation += atom.weight * v;
      magnitude += atom.weight * std::abs(v);
    }
    CHECK(std::abs(pairing(p, correlations_of(mu)) - expectation) <= 1e-9 * (1.0 + magnitude));
  }
}

TEST_CASE("lattice gas correlations have a zero diagonal") {
  std::mt19937_64 rng(5);
  const Domain domain = Domain::lattice_gas(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto corr = correlations_of(testing::random_distribution(domain, rng));
    for (std::size_t i = 0; i < 3; ++i) CHECK(corr.rho2(i, i) == 0.0);
  }
}

TEST_CASE("correlation validation") {
  CorrelationPair asym{{0.1, 0.1}, Matrix<double>::from_rows({{0.0, 0.1}, {0.2, 0.0}})};
  CHECK_THROWS_AS(validate_correlations(asym, 2), InvalidInputError);
  CorrelationPair neg{{-0.1}, Matrix<double>(1, 1)};
  CHECK_THROWS_AS(validate_correlations(neg, 1), InvalidInputError);
  CHECK_NOTHROW(validate_correlations(neg, 1, false));
  CorrelationPair nan{{std::nan("")}, Matrix<double>(1, 1)};
  CHECK_THROWS_AS(validate_correlations(nan, 1, false), InvalidInputError);
  CHECK_THROWS_AS(validate_correlations(neg, 2), DimensionError);
}

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("0.75") == Rational(3, 4));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("0.0") == Rational(0));
  CHECK(parse_rational("0.09/0.3") == Rational(3, 10));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInputError);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInputError);
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(to_rational(0.5) == Rational(1, 2));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> value(-1e3, 1e3);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = trial % 2 ? value(rng) : value(rng) * 1e-9;
    char buf[64];
    const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
    CHECK(to_double(parse_rational(std::string_view(buf, end))) == x);
  }
  CHECK_THROWS_AS(to_rational(std::nan("")), InvalidInputError);
}

}  // namespace
}  // namespace realz
