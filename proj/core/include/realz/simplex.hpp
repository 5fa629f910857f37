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
#ifndef REALZ_SIMPLEX_HPP_
#define REALZ_SIMPLEX_HPP_

// Dense two-phase primal simplex for  min c'x  s.t.  A x = b, x >= 0.
//
// Phase one adds one artificial per row and minimizes their sum. The
// artificial columns are kept in the tableau for the whole solve, so they
// always hold B^-1 and give the row duals directly.
//
// Infeasibility is reported with a Farkas vector y satisfying
//   y'A_j >= 0 for every column j   and   y'b < 0,
// which is the sign convention the realizability certificates use: y'A_j is
// the certificate evaluated on configuration j and y'b is its pairing.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realz/error.hpp"
#include "realz/numeric.hpp"

namespace realz {

enum class PivotRule { kBland, kDantzig };

struct SimplexSettings {
  PivotRule pivot_rule = PivotRule::kBland;
  std::size_t max_iterations = 200'000;
  // Floating point only; ignored for exact arithmetic.
  double pivot_tolerance = 1e-11;
  double cost_tolerance = 1e-12;
  // Phase one optimum above this value means infeasible.
  double feasibility_tolerance = 1e-9;
  // Consecutive degenerate Dantzig pivots before falling back to Bland.
  std::size_t degenerate_switch = 50;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<T> x;       // primal solution (kOptimal)
  std::vector<T> dual;    // row duals pi with c_j - pi'A_j >= 0 (kOptimal)
  std::vector<T> farkas;  // y with y'A >= 0, y'b < 0 (kInfeasible)
  T objective = T(0);
  T infeasibility = T(0);  // phase one optimum
  std::size_t iterations = 0;
  bool switched_to_bland = false;
};

template <class T>
class SimplexSolver {
 public:
  SimplexSolver(const Matrix<T>& a, std::span<const T> b,
                const std::vector<T>* cost, SimplexSettings settings)
      : m_(a.rows()), n_(a.cols()), settings_(settings) {
    if (b.size() != m_) throw DimensionError("rhs length differs from row count");
    if (cost && cost->size() != n_) {
      throw DimensionError("objective length differs from column count");
    }
    if (cost) cost_ = *cost;
    width_ = n_ + m_ + 1;
    tab_ = Matrix<T>(m_, width_, T(0));
    row_sign_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const bool flip = b[r] < 0;
      row_sign_[r] = flip ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) {
        tab_(r, j) = flip ? T(-a(r, j)) : a(r, j);
      }
      tab_(r, n_ + r) = T(1);
      tab_(r, rhs()) = flip ? T(-b[r]) : b[r];
      basis_[r] = n_ + r;
    }
    basic_.assign(n_ + m_, 0);
    for (std::size_t r = 0; r < m_; ++r) basic_[n_ + r] = 1;
    rule_ = settings_.pivot_rule;
  }

  LpResult<T> solve() {
    LpResult<T> result;
    // Phase one: cost 1 on artificials.
    phase_cost_.assign(n_ + m_, T(0));
    for (std::size_t r = 0; r < m_; ++r) phase_cost_[n_ + r] = T(1);
    if (iterate(result) == LpStatus::kUnbounded) {
      throw Error("phase one reported unbounded; tableau is corrupt");
    }
    result.infeasibility = current_objective();
    if (is_positive(result.infeasibility, settings_.feasibility_tolerance)) {
      result.status = LpStatus::kInfeasible;
      std::vector<T> pi = duals();
      result.farkas.resize(m_);
      for (std::size_t r = 0; r < m_; ++r) {
        result.farkas[r] = row_sign_[r] > 0 ? T(-pi[r]) : pi[r];
      }
      return result;
    }
    drive_out_artificials();

    // Phase two: user cost, artificials barred from entering.
    phase_cost_.assign(n_ + m_, T(0));
    for (std::size_t j = 0; j < cost_.size(); ++j) phase_cost_[j] = cost_[j];
    if (iterate(result) == LpStatus::kUnbounded) {
      result.status = LpStatus::kUnbounded;
      return result;
    }
    result.status = LpStatus::kOptimal;
    result.objective = current_objective();
    result.x.assign(n_, T(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) result.x[basis_[r]] = tab_(r, rhs());
    }
    std::vector<T> pi = duals();
    result.dual.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      result.dual[r] = row_sign_[r] > 0 ? pi[r] : T(-pi[r]);
    }
    return result;
  }

 private:
  std::size_t rhs() const { return n_ + m_; }

  bool is_positive(const T& v, double tol) const {
    if constexpr (kIsExact<T>) {
      return v > 0;
    } else {
      return v > tol;
    }
  }

  T current_objective() const {
    T value = T(0);
    for (std::size_t r = 0; r < m_; ++r) {
      if (phase_cost_[basis_[r]] != 0) value += phase_cost_[basis_[r]] * tab_(r, rhs());
    }
    return value;
  }

  // pi_i = sum_r c_B(r) (B^-1)_{r,i}; column n_ + i of the tableau is B^-1 e_i.
  std::vector<T> duals() const {
    std::vector<T> pi(m_, T(0));
    for (std::size_t r = 0; r < m_; ++r) {
      const T& c = phase_cost_[basis_[r]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < m_; ++i) pi[i] += c * tab_(r, n_ + i);
    }
    return pi;
  }

  T reduced_cost(std::size_t j) const {
    T d = phase_cost_[j];
    for (std::size_t r = 0; r < m_; ++r) {
      const T& c = phase_cost_[basis_[r]];
      if (c != 0 && tab_(r, j) != 0) d -= c * tab_(r, j);
    }
    return d;
  }

  bool negative_cost(const T& d) const {
    if constexpr (kIsExact<T>) {
      return d < 0;
    } else {
      return d < -settings_.cost_tolerance;
    }
  }

  bool usable_pivot(const T& v) const {
    if constexpr (kIsExact<T>) {
      return v > 0;
    } else {
      return v > settings_.pivot_tolerance;
    }
  }

  std::optional<std::size_t> choose_entering() const {
    std::optional<std::size_t> best;
    T best_cost = T(0);
    // Artificials never re-enter; in phase one only structural columns move.
    for (std::size_t j = 0; j < n_; ++j) {
      if (is_basic(j)) continue;
      const T d = reduced_cost(j);
      if (!negative_cost(d)) continue;
      if (rule_ == PivotRule::kBland) return j;
      if (!best || d < best_cost) {
        best = j;
        best_cost = d;
      }
    }
    return best;
  }

  std::optional<std::size_t> choose_leaving(std::size_t col) const {
    std::optional<std::size_t> best;
    T best_ratio = T(0);
    for (std::size_t r = 0; r < m_; ++r) {
      const T& v = tab_(r, col);
      if (!usable_pivot(v)) continue;
      const T ratio = tab_(r, rhs()) / v;
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[*best])) {
        best = r;
        best_ratio = ratio;
      }
    }
    return best;
  }

  bool is_basic(std::size_t j) const { return basic_[j] != 0; }

  void pivot(std::size_t row, std::size_t col) {
    const T inv = T(1) / tab_(row, col);
    for (std::size_t c = 0; c < width_; ++c) {
      if (tab_(row, c) != 0) tab_(row, c) *= inv;
    }
    tab_(row, col) = T(1);
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row) continue;
      const T factor = tab_(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) {
        if (tab_(row, c) != 0) tab_(r, c) -= factor * tab_(row, c);
      }
      tab_(r, col) = T(0);
      if constexpr (!kIsExact<T>) {
        // Round-off below zero on the rhs would poison later ratio tests.
        if (tab_(r, rhs()) < 0 && tab_(r, rhs()) > -settings_.pivot_tolerance) {
          tab_(r, rhs()) = 0;
        }
      }
    }
    basic_[basis_[row]] = 0;
    basic_[col] = 1;
    basis_[row] = col;
  }

  LpStatus iterate(LpResult<T>& result) {
    std::size_t degenerate_run = 0;
    while (true) {
      const auto col = choose_entering();
      if (!col) return LpStatus::kOptimal;
      const auto row = choose_leaving(*col);
      if (!row) return LpStatus::kUnbounded;
      if (++result.iterations > settings_.max_iterations) {
        throw IterationLimitError("simplex exceeded " +
                                  std::to_string(settings_.max_iterations) +
                                  " iterations");
      }
      const bool degenerate = tab_(*row, rhs()) == 0;
      degenerate_run = degenerate ? degenerate_run + 1 : 0;
      if (rule_ == PivotRule::kDantzig &&
          degenerate_run > settings_.degenerate_switch) {
        rule_ = PivotRule::kBland;
        result.switched_to_bland = true;
      }
      pivot(*row, *col);
    }
  }

  // After a feasible phase one, any artificial still basic sits at level
  // zero. Swap it for a structural column when the row allows it; rows with
  // no structural entry are redundant and keep their artificial.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < n_; ++j) {
        if (is_basic(j)) continue;
        const T v = tab_(r, j) < 0 ? T(-tab_(r, j)) : tab_(r, j);
        bool ok;
        if constexpr (kIsExact<T>) {
          ok = v != 0;
        } else {
          ok = v > settings_.pivot_tolerance;
        }
        if (ok && (!best || v > abs_entry(r, *best))) best = j;
      }
      if (best) {
        tab_(r, rhs()) = T(0);
        pivot(r, *best);
      }
    }
  }

  T abs_entry(std::size_t r, std::size_t c) const {
    return tab_(r, c) < 0 ? T(-tab_(r, c)) : tab_(r, c);
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_ = 0;
  SimplexSettings settings_;
  PivotRule rule_;
  std::vector<T> cost_;
  std::vector<T> phase_cost_;
  Matrix<T> tab_;
  std::vector<int> row_sign_;
  std::vector<std::size_t> basis_;
  std::vector<char> basic_;
};

template <class T>
LpResult<T> solve_lp(const Matrix<T>& a, std::span<const T> b,
                     const std::vector<T>* cost, const SimplexSettings& settings) {
  return SimplexSolver<T>(a, b, cost, settings).solve();
}

}  // namespace realz

#endif  // REALZ_SIMPLEX_HPP_
