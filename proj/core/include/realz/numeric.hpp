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
#ifndef REALZ_NUMERIC_HPP_
#define REALZ_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "realz/error.hpp"

namespace realz {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
inline constexpr bool kIsExact = std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// Exact conversion; every finite double is a dyadic rational.
Rational to_rational(double x);

// Parses "p/q", an integer, or a decimal literal such as "0.125" or "1e-3"
// into an exact rational. Throws InvalidInputError on anything else.
Rational parse_rational(std::string_view text);

std::string format_rational(const Rational& x);

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), n_cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != n_cols) {
        throw DimensionError("ragged matrix rows");
      }
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) {
    return std::span<T>(data_).subspan(r * cols_, cols_);
  }
  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * cols_, cols_);
  }

  const std::vector<T>& data() const { return data_; }

  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
bool is_symmetric(const Matrix<T>& m, double tol = 0.0) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if constexpr (kIsExact<T>) {
        if (m(i, j) != m(j, i)) return false;
      } else {
        if (std::abs(m(i, j) - m(j, i)) > tol) return false;
      }
    }
  }
  return true;
}

inline std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  return m.map<double>([](const Rational& x) { return to_double(x); });
}

std::vector<Rational> to_rational(const std::vector<double>& v);
Matrix<Rational> to_rational(const Matrix<double>& m);

}  // namespace realz

#endif  // REALZ_NUMERIC_HPP_
