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
#ifndef REALZ_CONDITIONS_HPP_
#define REALZ_CONDITIONS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realz/correlation.hpp"
#include "realz/domain.hpp"
#include "realz/enumeration.hpp"

namespace realz {

// Necessary conditions derived from the family
//   P(eta) = a <f, eta>^2 + b <f, eta> + c,   p(x) = a x^2 + b x + c >= 0 on F,
// where F is the range of <f, .> over admissible configurations. Their
// pairing with (rho1, rho2) is a V(f) + p(E(f)), and each sign of a has one
// extremal polynomial that implies all the others:
//   a = +1  gap          V >= (x+ - E)(E - x-)
//   a = -1  upper        V <= (sup F - E)(E - inf F)
//   a =  0  mean bounds  inf F <= E <= sup F
// The plain variance condition V >= 0 is reported alongside.

inline constexpr double kConditionTolerance = 1e-9;

struct ConditionVerdict {
  std::string condition_name;  // "variance", "gap", "upper", "mean_bounds"
  std::string test_function_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // >= 0 means pass
  bool passed = true;
  // Gap condition with E(f) outside [min F, max F]: reported as the failing
  // mean bound instead.
  bool delegated = false;
};

struct ConditionReport {
  std::vector<ConditionVerdict> verdicts;
  bool overall = true;
  std::optional<ConditionVerdict> worst;
};

ConditionReport make_report(std::vector<ConditionVerdict> verdicts);

struct TestFunction {
  std::string id;
  std::vector<double> values;
};

struct TestFamily {
  enum class Kind { kSingletons, kPairs, kBalls, kCustom };
  Kind kind = Kind::kSingletons;
  double radius = 0.0;                  // kBalls
  std::vector<TestFunction> functions;  // kCustom

  static TestFamily singletons() { return {Kind::kSingletons, 0.0, {}}; }
  static TestFamily pairs() { return {Kind::kPairs, 0.0, {}}; }
  static TestFamily balls(double radius) { return {Kind::kBalls, radius, {}}; }
  static TestFamily custom(std::vector<TestFunction> fs) {
    return {Kind::kCustom, 0.0, std::move(fs)};
  }

  // Concrete test functions in declaration order.
  std::vector<TestFunction> expand(const Domain& domain) const;
};

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;
};

MeanVariance mean_and_variance(const CorrelationPair& corr, std::span<const double> f);

ConditionVerdict check_variance(const CorrelationPair& corr, std::span<const double> f,
                                const std::string& id = "f");

ConditionVerdict check_gap(const CorrelationPair& corr, std::span<const double> f,
                           const RangeSet& range, const std::string& id = "f");
ConditionVerdict check_gap(const CorrelationPair& corr, std::span<const double> f,
                           const Domain& domain, const std::string& id = "f");

ConditionVerdict check_upper(const CorrelationPair& corr, std::span<const double> f,
                             const RangeSet& range, const std::string& id = "f");
ConditionVerdict check_upper(const CorrelationPair& corr, std::span<const double> f,
                             const Domain& domain, const std::string& id = "f");

ConditionVerdict check_mean_bounds(const CorrelationPair& corr, std::span<const double> f,
                                   const RangeSet& range, const std::string& id = "f");
ConditionVerdict check_mean_bounds(const CorrelationPair& corr, std::span<const double> f,
                                   const Domain& domain, const std::string& id = "f");

ConditionReport run_battery(const Domain& domain, const CorrelationPair& corr,
                            const TestFamily& family,
                            std::size_t limit = kDefaultEnumerationLimit);
ConditionReport run_battery(const Domain& domain, const CorrelationPair& corr,
                            std::span<const TestFamily> families,
                            std::size_t limit = kDefaultEnumerationLimit);

}  // namespace realz

#endif  // REALZ_CONDITIONS_HPP_
