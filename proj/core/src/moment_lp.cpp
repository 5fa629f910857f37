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
#include "moment_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "realz/error.hpp"
#include "realz/simplex.hpp"

namespace realz::detail {
namespace {

// Weights below this are treated as round-off and left out of witnesses.
constexpr double kNegligibleWeight = 1e-14;

template <class T>
QuadraticPolynomial as_double(const BasicQuadraticPolynomial<T>& p) {
  if constexpr (kIsExact<T>) {
    return to_double(p);
  } else {
    return p;
  }
}

template <class T>
CorrelationPair as_double(const BasicCorrelationPair<T>& c) {
  if constexpr (kIsExact<T>) {
    return to_double(c);
  } else {
    return c;
  }
}

template <class T>
Distribution as_double(const BasicDistribution<T>& d) {
  if constexpr (kIsExact<T>) {
    return to_double(d);
  } else {
    return d;
  }
}

template <class T>
void add_key(BasicQuadraticPolynomial<T>& p, const RowKey& key, const T& y) {
  switch (key.kind) {
    case RowKey::Kind::kNormalization:
      p.f0 += y;
      break;
    case RowKey::Kind::kDensity:
      p.f1[key.i] += y;
      break;
    case RowKey::Kind::kPair:
      if (key.i == key.j) {
        p.f2(key.i, key.i) += y;
      } else {
        const T half = y / 2;
        p.f2(key.i, key.j) += half;
        p.f2(key.j, key.i) += half;
      }
      break;
  }
}

// The polynomial sum_g y_g * (row g), i.e. P(eta) = y' A_eta.
template <class T>
BasicQuadraticPolynomial<T> rows_to_polynomial(
    std::size_t sites, const std::vector<RowGroup>& groups,
    const std::vector<std::size_t>& rows, const std::vector<T>& y) {
  auto p = BasicQuadraticPolynomial<T>::zero(sites);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (y[r] == 0) continue;
    for (const RowKey& key : groups[rows[r]]) add_key(p, key, y[r]);
  }
  return p;
}

template <class T>
std::vector<Configuration> flatten(const std::vector<ColumnBlock>& blocks) {
  std::vector<Configuration> all;
  for (const auto& b : blocks) all.insert(all.end(), b.members.begin(), b.members.end());
  return all;
}

template <class T>
T min_value(const BasicQuadraticPolynomial<T>& p,
            const std::vector<Configuration>& configs) {
  std::optional<T> best;
  for (const auto& c : configs) {
    T v = eval_quadratic(p, c);
    if (!best || v < *best) best = std::move(v);
  }
  return best.value_or(T(0));
}

// Shifts the constant so the polynomial is nonnegative on every admissible
// configuration, rescales to unit max coefficient and checks the pairing.
template <class T>
InfeasibleRealization finalize_certificate(BasicQuadraticPolynomial<T> p,
                                           const BasicCorrelationPair<T>& corr,
                                           const std::vector<Configuration>& configs,
                                           const SolverOptions& opts,
                                           bool shortcut) {
  const T low = min_value(p, configs);
  if (low < 0) p.f0 -= low;
  if constexpr (kIsExact<T>) {
    if (!(pairing(p, corr) < 0)) {
      throw Error("exact Farkas vector does not separate; solver bug");
    }
  }
  QuadraticPolynomial cert = as_double(p);
  const double scale = cert.max_abs_coefficient();
  if (!(scale > 0.0)) {
    throw NumericalError("certificate vanished during normalization");
  }
  cert = cert.scaled(1.0 / scale);
  const double low_d = min_value(cert, configs);
  if (low_d < 0.0) cert.f0 -= low_d;
  const CorrelationPair corr_d = as_double(corr);
  const double pair = pairing(cert, corr_d);
  if constexpr (!kIsExact<T>) {
    if (!(pair <= -opts.certificate_margin())) {
      throw NumericalError(
          "instance lies within tolerance of the realizable set boundary; "
          "certificate pairing " + std::to_string(pair) +
          " does not clear the margin");
    }
  }
  return {std::move(cert), pair, shortcut};
}

template <class T>
bool below_threshold(const T& x, const SolverOptions& opts) {
  if constexpr (kIsExact<T>) {
    return x < 0;
  } else {
    return x < -opts.certificate_margin();
  }
}

template <class T>
bool negligible(const T& x, const SolverOptions& opts) {
  if constexpr (kIsExact<T>) {
    return x == 0;
  } else {
    return std::abs(x) <= opts.tolerance;
  }
}

// A negative prescribed moment is refuted by the moment's own monomial,
// which is nonnegative on every configuration.
template <class T>
std::optional<InfeasibleRealization> negative_entry_certificate(
    const BasicCorrelationPair<T>& corr, const std::vector<Configuration>& configs,
    const SolverOptions& opts) {
  const std::size_t s = corr.size();
  for (const RowKey& key : moment_keys(s)) {
    if (key.kind == RowKey::Kind::kNormalization) continue;
    if (!below_threshold(key_target(key, corr), opts)) continue;
    auto p = BasicQuadraticPolynomial<T>::zero(s);
    add_key(p, key, T(1));
    return finalize_certificate(std::move(p), corr, configs, opts, true);
  }
  return std::nullopt;
}

template <class T>
struct Assembly {
  std::vector<std::size_t> rows;  // group indices kept in the LP
  Matrix<T> a;
  std::vector<T> b;
  std::optional<InfeasibleRealization> shortcut;
};

template <class T>
Assembly<T> assemble(const BasicCorrelationPair<T>& corr,
                     const std::vector<RowGroup>& groups,
                     const std::vector<ColumnBlock>& blocks,
                     const std::vector<Configuration>& configs,
                     const SolverOptions& opts) {
  Assembly<T> out;
  const std::size_t s = corr.size();
  std::vector<std::vector<long long>> values;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<long long> row(blocks.size(), 0);
    bool vanishes = true;
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      for (const RowKey& key : groups[g]) {
        row[c] += key_value(key, blocks[c].members.front());
      }
      vanishes = vanishes && row[c] == 0;
    }
    T target = T(0);
    for (const RowKey& key : groups[g]) target += key_target(key, corr);
    if (vanishes) {
      if (negligible(target, opts)) continue;
      // Row is identically zero on configurations but its target is not:
      // -sign(target) * row is a certificate.
      auto p = BasicQuadraticPolynomial<T>::zero(s);
      const T sign = target > 0 ? T(-1) : T(1);
      for (const RowKey& key : groups[g]) add_key(p, key, sign);
      out.shortcut = finalize_certificate(std::move(p), corr, configs, opts, true);
      return out;
    }
    out.rows.push_back(g);
    values.push_back(std::move(row));
    out.b.push_back(std::move(target));
  }
  out.a = Matrix<T>(out.rows.size(), blocks.size(), T(0));
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    for (std::size_t c = 0; c < blocks.size(); ++c) out.a(r, c) = T(values[r][c]);
  }
  return out;
}

template <class T>
BasicDistribution<T> spread(const std::vector<ColumnBlock>& blocks,
                            const std::vector<T>& x) {
  BasicDistribution<T> dist;
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    if constexpr (kIsExact<T>) {
      if (x[c] == 0) continue;
    } else {
      if (!(x[c] > kNegligibleWeight)) continue;
    }
    const T share = x[c] / static_cast<long long>(blocks[c].members.size());
    for (const auto& member : blocks[c].members) dist.atoms.push_back({member, share});
  }
  return canonicalize(std::move(dist));
}

template <class T>
void check_witness(const BasicDistribution<T>& witness,
                   const BasicCorrelationPair<T>& corr, const SolverOptions& opts) {
  if constexpr (kIsExact<T>) {
    const auto got = correlations_of(witness);
    if (got.rho1 != corr.rho1 || !(got.rho2 == corr.rho2)) {
      throw Error("exact witness does not reproduce the correlations; solver bug");
    }
  } else {
    double sum = 0.0;
    for (const auto& atom : witness.atoms) sum += atom.weight;
    if (witness.atoms.empty() || std::abs(sum - 1.0) > kWeightSumTolerance) {
      throw NumericalError("witness weights sum to " + std::to_string(sum));
    }
    const double residual = max_abs_difference(correlations_of(witness), corr);
    if (residual > opts.tolerance) {
      throw NumericalError("witness misses the correlations by " +
                           std::to_string(residual));
    }
  }
}

template <class T>
SolveStats stats_of(const Assembly<T>& assembly, std::size_t configs,
                    std::size_t iterations) {
  return {configs, assembly.rows.size(), assembly.a.cols(), iterations};
}

}  // namespace

std::vector<RowKey> moment_keys(std::size_t sites) {
  std::vector<RowKey> keys;
  keys.push_back({RowKey::Kind::kNormalization, 0, 0});
  for (std::size_t i = 0; i < sites; ++i) keys.push_back({RowKey::Kind::kDensity, i, 0});
  for (std::size_t i = 0; i < sites; ++i) {
    for (std::size_t j = i; j < sites; ++j) keys.push_back({RowKey::Kind::kPair, i, j});
  }
  return keys;
}

std::vector<RowGroup> singleton_groups(std::size_t sites) {
  std::vector<RowGroup> groups;
  for (const auto& key : moment_keys(sites)) groups.push_back({key});
  return groups;
}

std::vector<ColumnBlock> singleton_blocks(std::vector<Configuration> configs) {
  std::vector<ColumnBlock> blocks;
  blocks.reserve(configs.size());
  for (auto& c : configs) blocks.push_back({{std::move(c)}});
  return blocks;
}

long long key_value(const RowKey& key, const Configuration& config) {
  switch (key.kind) {
    case RowKey::Kind::kNormalization:
      return 1;
    case RowKey::Kind::kDensity:
      return config[key.i];
    case RowKey::Kind::kPair: {
      const long long ni = config[key.i];
      return key.i == key.j ? ni * (ni - 1) : ni * config[key.j];
    }
  }
  return 0;
}

template <class T>
T key_target(const RowKey& key, const BasicCorrelationPair<T>& corr) {
  switch (key.kind) {
    case RowKey::Kind::kNormalization:
      return T(1);
    case RowKey::Kind::kDensity:
      return corr.rho1[key.i];
    case RowKey::Kind::kPair:
      return corr.rho2(key.i, key.j);
  }
  return T(0);
}

template <class T>
RealizationResult realize(const BasicCorrelationPair<T>& corr,
                          const std::vector<RowGroup>& groups,
                          const std::vector<ColumnBlock>& blocks,
                          const SolverOptions& opts) {
  opts.validate();
  const std::vector<Configuration> configs = flatten<T>(blocks);
  if (auto cert = negative_entry_certificate(corr, configs, opts)) {
    return {*cert, {configs.size(), 0, 0, 0}};
  }
  Assembly<T> assembly = assemble(corr, groups, blocks, configs, opts);
  if (assembly.shortcut) {
    return {*assembly.shortcut, stats_of(assembly, configs.size(), 0)};
  }
  const LpResult<T> lp = solve_lp<T>(assembly.a, assembly.b, nullptr, simplex_settings(opts));
  const SolveStats stats = stats_of(assembly, configs.size(), lp.iterations);
  if (lp.status == LpStatus::kInfeasible) {
    auto p = rows_to_polynomial(corr.size(), groups, assembly.rows, lp.farkas);
    return {finalize_certificate(std::move(p), corr, configs, opts, false), stats};
  }
  BasicDistribution<T> witness = spread(blocks, lp.x);
  check_witness(witness, corr, opts);
  FeasibleRealization feasible;
  feasible.witness = as_double(witness);
  if constexpr (kIsExact<T>) feasible.exact_witness = std::move(witness);
  return {std::move(feasible), stats};
}

template <class T>
ThirdMomentResult minimize_third_moment(const BasicCorrelationPair<T>& corr,
                                        const std::vector<RowGroup>& groups,
                                        const std::vector<ColumnBlock>& blocks,
                                        const SolverOptions& opts) {
  opts.validate();
  const std::vector<Configuration> configs = flatten<T>(blocks);
  if (auto cert = negative_entry_certificate(corr, configs, opts)) {
    return {*cert, {configs.size(), 0, 0, 0}};
  }
  Assembly<T> assembly = assemble(corr, groups, blocks, configs, opts);
  if (assembly.shortcut) {
    return {*assembly.shortcut, stats_of(assembly, configs.size(), 0)};
  }
  std::vector<T> cost;
  cost.reserve(blocks.size());
  for (const auto& block : blocks) cost.push_back(T(h3(block.members.front())));
  const LpResult<T> lp = solve_lp<T>(assembly.a, assembly.b, &cost, simplex_settings(opts));
  const SolveStats stats = stats_of(assembly, configs.size(), lp.iterations);
  if (lp.status == LpStatus::kInfeasible) {
    auto p = rows_to_polynomial(corr.size(), groups, assembly.rows, lp.farkas);
    return {finalize_certificate(std::move(p), corr, configs, opts, false), stats};
  }
  if (lp.status == LpStatus::kUnbounded) {
    throw Error("third-moment LP unbounded on a bounded polytope; solver bug");
  }
  BasicDistribution<T> witness = spread(blocks, lp.x);
  check_witness(witness, corr, opts);

  FiniteThirdMoment finite;
  finite.r_star = to_double(lp.objective);
  if constexpr (kIsExact<T>) finite.exact_r_star = lp.objective;
  finite.witness = as_double(witness);
  if constexpr (kIsExact<T>) finite.exact_witness = std::move(witness);
  const auto dual = rows_to_polynomial(corr.size(), groups, assembly.rows, lp.dual);
  finite.optimality_certificate.quadratic = as_double(dual).scaled(-1.0);
  finite.optimality_certificate.f3 = 1.0;
  return {std::move(finite), stats};
}

template Rational key_target(const RowKey&, const ExactCorrelationPair&);
template double key_target(const RowKey&, const CorrelationPair&);
template RealizationResult realize(const CorrelationPair&, const std::vector<RowGroup>&,
                                   const std::vector<ColumnBlock>&, const SolverOptions&);
template RealizationResult realize(const ExactCorrelationPair&, const std::vector<RowGroup>&,
                                   const std::vector<ColumnBlock>&, const SolverOptions&);
template ThirdMomentResult minimize_third_moment(const CorrelationPair&,
                                                 const std::vector<RowGroup>&,
                                                 const std::vector<ColumnBlock>&,
                                                 const SolverOptions&);
template ThirdMomentResult minimize_third_moment(const ExactCorrelationPair&,
                                                 const std::vector<RowGroup>&,
                                                 const std::vector<ColumnBlock>&,
                                                 const SolverOptions&);

}  // namespace realz::detail
