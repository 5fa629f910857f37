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
#include "realz/conditions.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <utility>

#include "realz/error.hpp"

namespace realz {
namespace {

ConditionVerdict verdict(std::string name, const std::string& id, double lhs,
                         double rhs, double margin) {
  return {std::move(name), id, lhs, rhs, margin, margin >= -kConditionTolerance, false};
}

std::string format_radius(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", r);
  return buf;
}

// E(f) nudged onto [min F, max F] when it misses by less than the condition
// tolerance.
double clamp_mean(double e, const RangeSet& range) {
  if (e < range.min() && e >= range.min() - kConditionTolerance) return range.min();
  if (e > range.max() && e <= range.max() + kConditionTolerance) return range.max();
  return e;
}

void check_sizes(const CorrelationPair& corr, std::span<const double> f) {
  if (f.size() != corr.size() || corr.rho2.rows() != corr.size()) {
    throw DimensionError("test function and correlations have different sizes");
  }
}

}  // namespace

ConditionReport make_report(std::vector<ConditionVerdict> verdicts) {
  ConditionReport report;
  report.verdicts = std::move(verdicts);
  for (const auto& v : report.verdicts) {
    report.overall = report.overall && v.passed;
    if (!report.worst || v.margin < report.worst->margin) report.worst = v;
  }
  return report;
}

std::vector<TestFunction> TestFamily::expand(const Domain& domain) const {
  const std::size_t s = domain.size();
  const auto& labels = domain.labels();
  std::vector<TestFunction> out;
  switch (kind) {
    case Kind::kSingletons:
      for (std::size_t i = 0; i < s; ++i) {
        std::vector<double> f(s, 0.0);
        f[i] = 1.0;
        out.push_back({"site:" + labels[i], std::move(f)});
      }
      break;
    case Kind::kPairs:
      for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
          std::vector<double> f(s, 0.0);
          f[i] = f[j] = 1.0;
          out.push_back({"pair:" + labels[i] + "," + labels[j], std::move(f)});
        }
      }
      break;
    case Kind::kBalls: {
      std::set<std::vector<double>> seen;
      for (std::size_t c = 0; c < s; ++c) {
        std::set<double> radii;
        for (std::size_t j = 0; j < s; ++j) {
          if (domain.distance(c, j) <= radius) radii.insert(domain.distance(c, j));
        }
        for (double r : radii) {
          std::vector<double> f(s, 0.0);
          for (std::size_t j = 0; j < s; ++j) {
            if (domain.distance(c, j) <= r) f[j] = 1.0;
          }
          if (!seen.insert(f).second) continue;
          out.push_back({"ball:" + labels[c] + ":" + format_radius(r), std::move(f)});
        }
      }
      break;
    }
    case Kind::kCustom:
      for (const auto& fn : functions) {
        if (fn.values.size() != s) {
          throw DimensionError("test function '" + fn.id + "' has wrong length");
        }
        out.push_back(fn);
      }
      break;
  }
  return out;
}

MeanVariance mean_and_variance(const CorrelationPair& corr, std::span<const double> f) {
  check_sizes(corr, f);
  const std::size_t s = f.size();
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    mean += f[i] * corr.rho1[i];
    second += f[i] * f[i] * corr.rho1[i];
    for (std::size_t j = 0; j < s; ++j) second += f[i] * f[j] * corr.rho2(i, j);
  }
  return {mean, second - mean * mean};
}

ConditionVerdict check_variance(const CorrelationPair& corr, std::span<const double> f,
                                const std::string& id) {
  const auto mv = mean_and_variance(corr, f);
  return verdict("variance", id, mv.variance, 0.0, mv.variance);
}

ConditionVerdict check_gap(const CorrelationPair& corr, std::span<const double> f,
                           const RangeSet& range, const std::string& id) {
  const auto mv = mean_and_variance(corr, f);
  const double e = clamp_mean(mv.mean, range);
  const auto lo = range.below(e);
  const auto hi = range.above(e);
  if (!lo || !hi) {
    ConditionVerdict v = check_mean_bounds(corr, f, range, id);
    v.condition_name = "gap";
    v.delegated = true;
    return v;
  }
  const double rhs = (*hi - e) * (e - *lo);
  return verdict("gap", id, mv.variance, rhs, mv.variance - rhs);
}

ConditionVerdict check_gap(const CorrelationPair& corr, std::span<const double> f,
                           const Domain& domain, const std::string& id) {
  return check_gap(corr, f, range_of(f, domain), id);
}

ConditionVerdict check_upper(const CorrelationPair& corr, std::span<const double> f,
                             const RangeSet& range, const std::string& id) {
  const auto mv = mean_and_variance(corr, f);
  const double rhs = (range.max() - mv.mean) * (mv.mean - range.min());
  return verdict("upper", id, mv.variance, rhs, rhs - mv.variance);
}

ConditionVerdict check_upper(const CorrelationPair& corr, std::span<const double> f,
                             const Domain& domain, const std::string& id) {
  return check_upper(corr, f, range_of(f, domain), id);
}

ConditionVerdict check_mean_bounds(const CorrelationPair& corr, std::span<const double> f,
                                   const RangeSet& range, const std::string& id) {
  const auto mv = mean_and_variance(corr, f);
  const double lower = mv.mean - range.min();
  const double upper = range.max() - mv.mean;
  return lower <= upper ? verdict("mean_bounds", id, mv.mean, range.min(), lower)
                        : verdict("mean_bounds", id, mv.mean, range.max(), upper);
}

ConditionVerdict check_mean_bounds(const CorrelationPair& corr, std::span<const double> f,
                                   const Domain& domain, const std::string& id) {
  return check_mean_bounds(corr, f, range_of(f, domain), id);
}

ConditionReport run_battery(const Domain& domain, const CorrelationPair& corr,
                            const TestFamily& family, std::size_t limit) {
  return run_battery(domain, corr, std::span<const TestFamily>(&family, 1), limit);
}

ConditionReport run_battery(const Domain& domain, const CorrelationPair& corr,
                            std::span<const TestFamily> families, std::size_t limit) {
  validate_correlations(corr, domain.size(), /*require_nonnegative=*/false);
  std::vector<ConditionVerdict> verdicts;
  for (const auto& family : families) {
    for (const auto& fn : family.expand(domain)) {
      const RangeSet range =
          range_of(fn.values, domain, kDefaultRangeMergeTolerance, limit);
      verdicts.push_back(check_variance(corr, fn.values, fn.id));
      verdicts.push_back(check_gap(corr, fn.values, range, fn.id));
      verdicts.push_back(check_upper(corr, fn.values, range, fn.id));
      verdicts.push_back(check_mean_bounds(corr, fn.values, range, fn.id));
    }
  }
  return make_report(std::move(verdicts));
}

}  // namespace realz
