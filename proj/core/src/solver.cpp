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
#include "realz/solver.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "moment_lp.hpp"
#include "realz/error.hpp"

namespace realz {

void SolverOptions::validate() const {
  if (!(tolerance > 0.0 && tolerance <= 1e-3)) {
    throw InvalidInputError("tolerance must lie in (0, 1e-3], got " +
                            std::to_string(tolerance));
  }
  if (max_iterations == 0) throw InvalidInputError("max_iterations must be positive");
}

SimplexSettings simplex_settings(const SolverOptions& opts) {
  SimplexSettings s;
  s.pivot_rule = opts.pivot_rule;
  s.max_iterations = opts.max_iterations;
  s.feasibility_tolerance = opts.tolerance;
  return s;
}

double RestrictedCubic::evaluate(const Configuration& config) const {
  return eval_quadratic(quadratic, config) + f3 * static_cast<double>(h3(config));
}

double RestrictedCubic::pairing(const CorrelationPair& corr, double third_moment) const {
  return realz::pairing(quadratic, corr) + f3 * third_moment;
}

namespace {

template <class T>
RealizationResult check_impl(const Domain& domain, const BasicCorrelationPair<T>& corr,
                             const SolverOptions& opts) {
  opts.validate();
  validate_correlations(corr, domain.size(), /*require_nonnegative=*/false);
  auto blocks = detail::singleton_blocks(
      enumerate_configurations(domain, opts.enumeration_limit));
  return detail::realize(corr, detail::singleton_groups(domain.size()), blocks, opts);
}

template <class T>
ThirdMomentResult third_impl(const Domain& domain, const BasicCorrelationPair<T>& corr,
                             const SolverOptions& opts) {
  opts.validate();
  validate_correlations(corr, domain.size(), /*require_nonnegative=*/false);
  auto blocks = detail::singleton_blocks(
      enumerate_configurations(domain, opts.enumeration_limit));
  return detail::minimize_third_moment(corr, detail::singleton_groups(domain.size()),
                                       blocks, opts);
}

}  // namespace

RealizationResult check_realizability(const Domain& domain, const CorrelationPair& corr,
                                      const SolverOptions& opts) {
  if (opts.arithmetic_mode == ArithmeticMode::kRational) {
    validate_correlations(corr, domain.size(), false);
    return check_impl(domain, to_rational(corr), opts);
  }
  return check_impl(domain, corr, opts);
}

RealizationResult check_realizability(const Domain& domain,
                                      const ExactCorrelationPair& corr,
                                      const SolverOptions& opts) {
  if (opts.arithmetic_mode == ArithmeticMode::kRational) {
    return check_impl(domain, corr, opts);
  }
  return check_impl(domain, to_double(corr), opts);
}

ThirdMomentResult minimal_third_moment(const Domain& domain, const CorrelationPair& corr,
                                       const SolverOptions& opts) {
  if (opts.arithmetic_mode == ArithmeticMode::kRational) {
    validate_correlations(corr, domain.size(), false);
    return third_impl(domain, to_rational(corr), opts);
  }
  return third_impl(domain, corr, opts);
}

ThirdMomentResult minimal_third_moment(const Domain& domain,
                                       const ExactCorrelationPair& corr,
                                       const SolverOptions& opts) {
  if (opts.arithmetic_mode == ArithmeticMode::kRational) {
    return third_impl(domain, corr, opts);
  }
  return third_impl(domain, to_double(corr), opts);
}

bool verify_certificate(const Domain& domain, const QuadraticPolynomial& cert,
                        const CorrelationPair& corr, double tol, std::size_t limit) {
  if (cert.size() != domain.size() || corr.size() != domain.size()) {
    throw DimensionError("certificate, correlations and domain sizes differ");
  }
  bool nonnegative = true;
  for_each_configuration(
      domain,
      [&](const Configuration& c) {
        if (nonnegative && eval_quadratic(cert, c) < -tol) nonnegative = false;
      },
      limit);
  return nonnegative && pairing(cert, corr) < -tol;
}

LpFeasibilityResult lp_feasibility(const Matrix<double>& a_eq,
                                   const std::vector<double>& b_eq,
                                   const std::optional<std::vector<double>>& objective,
                                   const SolverOptions& opts) {
  opts.validate();
  if (b_eq.size() != a_eq.rows()) throw DimensionError("rhs length differs from row count");
  if (objective && objective->size() != a_eq.cols()) {
    throw DimensionError("objective length differs from column count");
  }
  LpFeasibilityResult out;
  auto fill = [&out](const auto& lp) {
    out.iterations = lp.iterations;
    if (lp.status == LpStatus::kUnbounded) throw Error("LP objective is unbounded below");
    out.feasible = lp.status == LpStatus::kOptimal;
    auto conv = [](const auto& v) {
      std::vector<double> d;
      for (const auto& x : v) d.push_back(to_double(x));
      return d;
    };
    out.solution = conv(lp.x);
    out.dual = conv(lp.dual);
    out.farkas = conv(lp.farkas);
    out.objective = to_double(lp.objective);
  };
  const SimplexSettings settings = simplex_settings(opts);
  if (opts.arithmetic_mode == ArithmeticMode::kRational) {
    const Matrix<Rational> a = to_rational(a_eq);
    const std::vector<Rational> b = to_rational(b_eq);
    std::optional<std::vector<Rational>> c;
    if (objective) c = to_rational(*objective);
    fill(solve_lp<Rational>(a, b, c ? &*c : nullptr, settings));
  } else {
    for (double x : b_eq) {
      if (!std::isfinite(x)) throw InvalidInputError("non-finite right-hand side");
    }
    fill(solve_lp<double>(a_eq, b_eq, objective ? &*objective : nullptr, settings));
  }
  return out;
}

}  // namespace realz
