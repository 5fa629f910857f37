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
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "realz/realz.hpp"

namespace realz {
namespace {

CorrelationPair single(double rho1, double rho2) {
  return {{rho1}, Matrix<double>::from_rows({{rho2}})};
}

CorrelationPair pair_instance(double rho1, double q) {
  return {{rho1, rho1}, Matrix<double>::from_rows({{0.0, q}, {q, 0.0}})};
}

double min_over_configurations(const Domain& domain, const QuadraticPolynomial& p) {
  double best = INFINITY;
  for (const auto& c : testing::brute_force_configurations(domain)) {
    best = std::min(best, eval_quadratic(p, c));
  }
  return best;
}

void check_witness(const Domain& domain, const RealizationResult& r,
                   const CorrelationPair& corr, double tol = 1e-9) {
  REQUIRE(r.feasible());
  CHECK_NOTHROW(validate_distribution(r.witness(), domain));
  CHECK(max_abs_difference(correlations_of(r.witness()), corr) <= tol);
}

void check_certificate(const Domain& domain, const RealizationResult& r,
                       const CorrelationPair& corr) {
  REQUIRE_FALSE(r.feasible());
  const auto& cert = r.certificate();
  CHECK(cert.max_abs_coefficient() == doctest::Approx(1.0));
  CHECK(min_over_configurations(domain, cert) >= -1e-9);
  CHECK(pairing(cert, corr) <= -1e-8);
  CHECK(r.infeasible_part().pairing == doctest::Approx(pairing(cert, corr)));
  CHECK(verify_certificate(domain, cert, corr, 1e-9));
}

TEST_CASE("the zero-density unit-pair instance is not realizable") {
  const Domain domain = Domain::single_site(5);
  const auto corr = single(0.0, 1.0);
  const auto r = check_realizability(domain, corr);
  check_certificate(domain, r, corr);
}

TEST_CASE("two-atom instance is realizable with the unique witness") {
  const Domain domain = Domain::single_site(4);
  const auto corr = single(1.0 / 3.0, 1.0);
  const auto r = check_realizability(domain, corr);
  check_witness(domain, r, corr);
  const auto w = canonicalize(r.witness());
  REQUIRE(w.size() == 2);
  CHECK(w.atoms[0].config == Configuration{{0}});
  CHECK(w.atoms[0].weight == doctest::Approx(11.0 / 12.0));
  CHECK(w.atoms[1].config == Configuration{{4}});
  CHECK(w.atoms[1].weight == doctest::Approx(1.0 / 12.0));

  SolverOptions exact;
  exact.arithmetic_mode = ArithmeticMode::kRational;
  ExactCorrelationPair ecorr{{Rational(1, 3)}, Matrix<Rational>(1, 1, Rational(1))};
  const auto re = check_realizability(domain, ecorr, exact);
  REQUIRE(re.feasible());
  REQUIRE(re.feasible_part().exact_witness.has_value());
  const auto ew = canonicalize(*re.feasible_part().exact_witness);
  CHECK(ew.atoms[0].weight == Rational(11, 12));
  CHECK(ew.atoms[1].weight == Rational(1, 12));
}

TEST_CASE("pair instance below the Yamada bound") {
  const Domain domain = Domain::lattice_gas(2);
  const auto corr = pair_instance(0.75, 0.4);
  const auto r = check_realizability(domain, corr);
  check_certificate(domain, r, corr);
  // The unique Farkas direction is the coefficient of p(0,0): (1-n0)(1-n1).
  const auto& cert = r.certificate();
  CHECK(eval_quadratic(cert, {{0, 0}}) == doctest::Approx(1.0));
  CHECK(eval_quadratic(cert, {{1, 0}}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eval_quadratic(cert, {{0, 1}}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eval_quadratic(cert, {{1, 1}}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.infeasible_part().pairing == doctest::Approx(-0.1));
}

TEST_CASE("correlations of an explicit distribution are realizable") {
  const Domain domain = Domain::uniform(3, 2);
  Distribution mu{{{Configuration{{0, 1, 2}}, 0.3},
                   {Configuration{{2, 0, 0}}, 0.5},
                   {Configuration{{1, 1, 1}}, 0.2}}};
  const auto corr = correlations_of(mu);
  check_witness(domain, check_realizability(domain, corr), corr);
}

TEST_CASE("structural shortcuts") {
  const Domain gas = Domain::lattice_gas(2);
  CorrelationPair diag{{0.5, 0.5}, Matrix<double>::from_rows({{0.2, 0.1}, {0.1, 0.0}})};
  const auto r = check_realizability(gas, diag);
  CHECK(r.infeasible_part().shortcut);
  check_certificate(gas, r, diag);

  CorrelationPair neg{{-0.5, 0.5}, Matrix<double>(2, 2)};
  const auto rn = check_realizability(gas, neg);
  CHECK(rn.infeasible_part().shortcut);
  CHECK(pairing(rn.certificate(), neg) == doctest::Approx(-0.5));
  CHECK(verify_certificate(gas, rn.certificate(), neg, 1e-9));

  DomainSpec spec;
  spec.distance = Matrix<double>::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  spec.caps = {1, 1};
  spec.exclusion_diameter = 2.0;
  const Domain hard(std::move(spec));
  const auto excluded = pair_instance(0.25, 0.05);
  const auto rh = check_realizability(hard, excluded);
  CHECK(rh.infeasible_part().shortcut);
  check_certificate(hard, rh, excluded);
}

TEST_CASE("boundary instance is feasible with an empty-configuration weight of zero") {
  const Domain domain = Domain::lattice_gas(2);
  const auto corr = pair_instance(0.75, 0.5);
  const auto r = check_realizability(domain, corr);
  check_witness(domain, r, corr);
  for (const auto& atom : r.witness().atoms) {
    if (atom.config == Configuration{{0, 0}}) CHECK(atom.weight <= 1e-9);
  }
}

TEST_CASE("verify_certificate examples") {
  const Domain domain = Domain::single_site(5);
  QuadraticPolynomial constant{1.0, {0.0}, Matrix<double>(1, 1)};
  CHECK_FALSE(verify_certificate(domain, constant, single(0.3, 0.2), 1e-9));

  QuadraticPolynomial falling{0.0, {0.0}, Matrix<double>(1, 1, 1.0)};
  CHECK(verify_certificate(domain, falling, single(0.0, -1.0), 1e-9));

  QuadraticPolynomial negative_somewhere{0.0, {-1.0}, Matrix<double>(1, 1)};
  CHECK_FALSE(verify_certificate(domain, negative_somewhere, single(1.0, 0.0), 1e-9));

  CHECK_THROWS_AS(verify_certificate(Domain::single_site(2), constant,
                                     pair_instance(0.1, 0.1), 1e-9),
                  DimensionError);
}

TEST_CASE("input checks") {
  const Domain domain = Domain::single_site(2);
  CorrelationPair bad{{0.1, 0.1}, Matrix<double>(2, 2)};
  CHECK_THROWS_AS(check_realizability(domain, bad), DimensionError);
  CHECK_THROWS_AS(check_realizability(domain, single(std::nan(""), 0.0)), InvalidInputError);
  SolverOptions exact;
  exact.arithmetic_mode = ArithmeticMode::kRational;
  CHECK_THROWS_AS(check_realizability(domain, single(INFINITY, 0.0), exact),
                  InvalidInputError);
  SolverOptions tiny;
  tiny.enumeration_limit = 2;
  CHECK_THROWS_AS(check_realizability(domain, single(0.1, 0.0), tiny), CapacityError);
}

TEST_CASE("float and rational modes agree on mixed instances") {
  SolverOptions exact;
  exact.arithmetic_mode = ArithmeticMode::kRational;
  const Domain domain = Domain::uniform(2, 2);
  for (double q : {0.0, 0.1, 0.3, 0.6}) {
    CorrelationPair corr{{0.5, 0.5}, Matrix<double>::from_rows({{0.2, q}, {q, 0.2}})};
    const bool fl = check_realizability(domain, corr).feasible();
    const bool ra = check_realizability(domain, corr, exact).feasible();
    CHECK(fl == ra);
    CHECK(fl == testing::oracle_realizable(domain, to_rational(corr)));
  }
}

TEST_CASE("Dantzig pricing reaches the same verdicts") {
  SolverOptions dantzig;
  dantzig.pivot_rule = PivotRule::kDantzig;
  const Domain domain = Domain::lattice_gas(2);
  CHECK_FALSE(check_realizability(domain, pair_instance(0.75, 0.4), dantzig).feasible());
  CHECK(check_realizability(domain, pair_instance(0.75, 0.5), dantzig).feasible());
}

TEST_CASE("minimal third moment examples") {
  const Domain domain = Domain::single_site(4);
  const auto empty = minimal_third_moment(domain, single(0.0, 0.0));
  REQUIRE(empty.finite());
  CHECK(empty.r_star() == doctest::Approx(0.0));

  const auto corr = single(1.0 / 3.0, 1.0);
  const auto r = minimal_third_moment(domain, corr);
  REQUIRE(r.finite());
  CHECK(r.r_star() == doctest::Approx(2.0));
  const auto& fin = r.finite_part();
  double e3 = 0.0;
  for (const auto& atom : fin.witness.atoms) e3 += atom.weight * static_cast<double>(h3(atom.config));
  CHECK(e3 == doctest::Approx(2.0));
  CHECK(max_abs_difference(correlations_of(fin.witness), corr) <= 1e-9);

  const auto& q = fin.optimality_certificate;
  CHECK(q.f3 == 1.0);
  for (const auto& c : testing::brute_force_configurations(domain)) CHECK(q.evaluate(c) >= -1e-9);
  CHECK(q.pairing(corr, fin.r_star) == doctest::Approx(0.0).epsilon(1e-9));

  const auto bad = minimal_third_moment(Domain::single_site(5), single(0.0, 1.0));
  REQUIRE_FALSE(bad.finite());
  CHECK(verify_certificate(Domain::single_site(5), bad.infeasible_part().certificate,
                           single(0.0, 1.0), 1e-9));
}

TEST_CASE("rational third moment is exact and matches the oracle") {
  SolverOptions exact;
  exact.arithmetic_mode = ArithmeticMode::kRational;
  for (int k = 4; k <= 6; ++k) {
    const Domain domain = Domain::single_site(k);
    ExactCorrelationPair corr{{Rational(1, 3)}, Matrix<Rational>(1, 1, Rational(1))};
    const auto r = minimal_third_moment(domain, corr, exact);
    REQUIRE(r.finite());
    REQUIRE(r.finite_part().exact_r_star.has_value());
    CHECK(*r.finite_part().exact_r_star == Rational(2));
    CHECK(testing::oracle_min_third_moment(domain, corr) == Rational(2));
  }
}

TEST_CASE("third moment agrees with the oracle on small random instances") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 15; ++trial) {
    const Domain domain = testing::random_domain(rng, 2, 3);
    if (testing::brute_force_configurations(domain).size() > 12) continue;
    const auto exact = correlations_of(testing::random_exact_distribution(domain, rng, 4));
    const auto r = minimal_third_moment(domain, to_double(exact));
    REQUIRE(r.finite());
    const auto oracle = testing::oracle_min_third_moment(domain, exact);
    REQUIRE(oracle.has_value());
    CHECK(r.r_star() == doctest::Approx(to_double(*oracle)).epsilon(1e-7));
    ++checked;
  }
  CHECK(checked >= 10);
}

}  // namespace
}  // namespace realz
