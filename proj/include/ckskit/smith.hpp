// Copyright 2026 The Authors.
//
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

#ifndef CKSKIT_SMITH_HPP_
#define CKSKIT_SMITH_HPP_

#include <cstdlib>
#include <optional>
#include <vector>

#include "ckskit/bigint.hpp"
#include "ckskit/errors.hpp"
#include "ckskit/matrix.hpp"

namespace ckskit {

namespace internal {

inline BigInt abs_value(const BigInt& v) { return abs(v); }
inline long long abs_value(long long v) { return v < 0 ? -v : v; }
inline int sign_of(const BigInt& v) { return sgn(v); }
inline int sign_of(long long v) { return (v > 0) - (v < 0); }

}  // namespace internal

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
template <class T>
struct SmithForm {
  Matrix<T> U;
  Matrix<T> D;
  Matrix<T> V;

  // Nonzero diagonal entries of D, in order.
  std::vector<T> invariant_factors() const {
    std::vector<T> out;
    std::size_t n = D.rows() < D.cols() ? D.rows() : D.cols();
    for (std::size_t i = 0; i < n && D(i, i) != 0; ++i) out.push_back(D(i, i));
    return out;
  }
  std::size_t rank() const { return invariant_factors().size(); }
};

namespace internal {

// Shared elimination loop. When `track` is false U and V stay empty.
template <class T>
SmithForm<T> smith_impl(const Matrix<T>& input, bool track) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithForm<T> out;
  out.D = input;
  if (track) {
    out.U = Matrix<T>::identity(m);
    out.V = Matrix<T>::identity(n);
  }
  Matrix<T>& a = out.D;

  auto swap_r = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track) out.U.swap_rows(i, j);
  };
  auto swap_c = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (track) out.V.swap_cols(i, j);
  };
  auto add_r = [&](std::size_t dst, std::size_t src, const T& f) {
    a.add_row(dst, src, f);
    if (track) out.U.add_row(dst, src, f);
  };
  auto add_c = [&](std::size_t dst, std::size_t src, const T& f) {
    a.add_col(dst, src, f);
    if (track) out.V.add_col(dst, src, f);
  };

  const std::size_t steps = m < n ? m : n;
  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot on the entry of minimal absolute value.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_abs = 0;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        T v = abs_value(a(i, j));
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
          if (best_abs == 1) break;
        }
      }
      if (best && best_abs == 1) break;
    }
    if (!best) break;
    swap_r(t, best->first);
    swap_c(t, best->second);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        T q = a(i, t) / a(t, t);
        if (q != 0) add_r(i, t, T(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        T q = a(t, j) / a(t, t);
        if (q != 0) add_c(j, t, T(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to (t, t).
        std::size_t bi = t;
        std::size_t bj = t;
        T bv = abs_value(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a(i, t) != 0 && abs_value(a(i, t)) < bv) {
            bi = i;
            bj = t;
            bv = abs_value(a(i, t));
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(t, j) != 0 && abs_value(a(t, j)) < bv) {
            bi = t;
            bj = j;
            bv = abs_value(a(t, j));
          }
        }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(i, j) != 0 && a(i, j) % a(t, t) != 0) {
            add_r(t, i, T(1));
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (sign_of(a(t, t)) < 0) {
      a.negate_row(t);
      if (track) out.U.negate_row(t);
    }
  }
  return out;
}

}  // namespace internal

// Full Smith normal form with transformation matrices.
template <class T>
SmithForm<T> smith_normal_form(const Matrix<T>& a) {
  return internal::smith_impl(a, true);
}

// Invariant factors only (no transformation matrices).
template <class T>
std::vector<T> invariant_factors(const Matrix<T>& a) {
  return internal::smith_impl(a, false).invariant_factors();
}

// Rank over the rationals, by fraction-free elimination.
template <class T>
std::size_t rank(const Matrix<T>& input) {
  Matrix<T> a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  T prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

// Determinant by Bareiss elimination; exact for integer entries.
template <class T>
T determinant(const Matrix<T>& input) {
  if (input.rows() != input.cols()) {
    throw DimensionMismatch("determinant of a non-square matrix");
  }
  const std::size_t n = input.rows();
  if (n == 0) return T(1);
  Matrix<T> a = input;
  T prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return T(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : T(-a(n - 1, n - 1));
}

// Solves A x = b over the rationals. Returns nullopt when inconsistent.
// Free variables, if any, are set to zero.
inline std::optional<std::vector<BigRational>> solve_rational(
    const IntMatrix& a, const std::vector<BigInt>& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DimensionMismatch("right-hand side length");
  Matrix<BigRational> aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug(p, c) == 0) ++p;
    if (p == m) continue;
    aug.swap_rows(r, p);
    BigRational inv = 1 / aug(r, c);
    for (std::size_t j = c; j <= n; ++j) aug(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      BigRational f = aug(i, c);
      for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i) {
    if (aug(i, n) != 0) return std::nullopt;
  }
  std::vector<BigRational> x(n, BigRational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug(i, n);
  return x;
}

}  // namespace ckskit

#endif  // CKSKIT_SMITH_HPP_
