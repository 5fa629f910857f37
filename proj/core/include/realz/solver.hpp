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
#ifndef REALZ_SOLVER_HPP_
#define REALZ_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "realz/correlation.hpp"
#include "realz/domain.hpp"
#include "realz/enumeration.hpp"
#include "realz/numeric.hpp"
#include "realz/simplex.hpp"

namespace realz {

enum class ArithmeticMode { kFloat, kRational };

struct SolverOptions {
  double tolerance = 1e-9;
  ArithmeticMode arithmetic_mode = ArithmeticMode::kFloat;
  PivotRule pivot_rule = PivotRule::kBland;
  std::size_t max_iterations = 200'000;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;

  // Throws InvalidInputError unless tolerance lies in (0, 1e-3].
  void validate() const;
  // Certificates must pair below -certificate_margin().
  double certificate_margin() const { return 10.0 * tolerance; }
};

struct FeasibleRealization {
  Distribution witness;
  // Present in rational mode; the double witness is its rounding.
  std::optional<ExactDistribution> exact_witness;
};

struct InfeasibleRealization {
  // Nonnegative on every admissible configuration, negative under pairing,
  // largest absolute coefficient equal to one.
  QuadraticPolynomial certificate;
  double pairing = 0.0;
  // True when the verdict came from a structural check (negative entry,
  // or a constraint row that vanishes on every configuration) rather than
  // from the LP.
  bool shortcut = false;
};

struct SolveStats {
  std::size_t configurations = 0;
  std::size_t lp_rows = 0;
  std::size_t lp_columns = 0;
  std::size_t iterations = 0;
};

struct RealizationResult {
  std::variant<FeasibleRealization, InfeasibleRealization> outcome;
  SolveStats stats;

  bool feasible() const {
    return std::holds_alternative<FeasibleRealization>(outcome);
  }
  const FeasibleRealization& feasible_part() const {
    return std::get<FeasibleRealization>(outcome);
  }
  const InfeasibleRealization& infeasible_part() const {
    return std::get<InfeasibleRealization>(outcome);
  }
  const Distribution& witness() const { return feasible_part().witness; }
  const QuadraticPolynomial& certificate() const {
    return infeasible_part().certificate;
  }
};

// Q(eta) = P(eta) + f3 * H_3(eta) with unit weights.
struct RestrictedCubic {
  QuadraticPolynomial quadratic;
  double f3 = 0.0;

  double evaluate(const Configuration& config) const;
  // Pairing of the quadratic part with corr plus f3 * third_moment.
  double pairing(const CorrelationPair& corr, double third_moment) const;
};

struct FiniteThirdMoment {
  double r_star = 0.0;
  std::optional<Rational> exact_r_star;
  Distribution witness;
  std::optional<ExactDistribution> exact_witness;
  // H_3 minus the optimal dual quadratic: nonnegative on every admissible
  // configuration and pairing to zero at r_star, which certifies that no
  // realizing distribution has a smaller third factorial moment.
  RestrictedCubic optimality_certificate;
};

struct ThirdMomentResult {
  std::variant<FiniteThirdMoment, InfeasibleRealization> outcome;
  SolveStats stats;

  bool finite() const { return std::holds_alternative<FiniteThirdMoment>(outcome); }
  const FiniteThirdMoment& finite_part() const {
    return std::get<FiniteThirdMoment>(outcome);
  }
  const InfeasibleRealization& infeasible_part() const {
    return std::get<InfeasibleRealization>(outcome);
  }
  double r_star() const { return finite_part().r_star; }
};

// Decides whether corr is the (rho1, rho2) of some distribution on the
// admissible configurations of the domain.
RealizationResult check_realizability(const Domain& domain,
                                      const CorrelationPair& corr,
                                      const SolverOptions& opts = {});
RealizationResult check_realizability(const Domain& domain,
                                      const ExactCorrelationPair& corr,
                                      const SolverOptions& opts = {});

// Replays a certificate by enumeration only: true iff the polynomial is
// >= -tol on every admissible configuration and pairs below -tol with corr.
bool verify_certificate(const Domain& domain, const QuadraticPolynomial& cert,
                        const CorrelationPair& corr, double tol,
                        std::size_t limit = kDefaultEnumerationLimit);

// Minimum of E[H_3] over distributions realizing corr on the domain.
ThirdMomentResult minimal_third_moment(const Domain& domain,
                                       const CorrelationPair& corr,
                                       const SolverOptions& opts = {});
ThirdMomentResult minimal_third_moment(const Domain& domain,
                                       const ExactCorrelationPair& corr,
                                       const SolverOptions& opts = {});

struct LpFeasibilityResult {
  bool feasible = false;
  std::vector<double> solution;
  std::vector<double> dual;
  // y with y'A >= -tol componentwise and y'b < -tol.
  std::vector<double> farkas;
  double objective = 0.0;
  std::size_t iterations = 0;
};

// min objective'x (or any x) subject to A x = b, x >= 0. Rational mode
// converts the inputs exactly and solves without round-off. Throws Error if
// the objective is unbounded below.
LpFeasibilityResult lp_feasibility(const Matrix<double>& a_eq,
                                   const std::vector<double>& b_eq,
                                   const std::optional<std::vector<double>>& objective,
                                   const SolverOptions& opts = {});

SimplexSettings simplex_settings(const SolverOptions& opts);

}  // namespace realz

#endif  // REALZ_SOLVER_HPP_
