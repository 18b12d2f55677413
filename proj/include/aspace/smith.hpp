#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace aspace {

using IntMatrix = std::vector<std::vector<long long>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// Invariant factors d_1 | d_2 | ... | d_r, all positive, and the rank over
/// the rationals.
struct SmithResult {
  std::vector<BigInt> invariant_factors;
  int rank = 0;
};

/// left * input * right == d, with left and right unimodular and d diagonal
/// with the divisibility chain on its non-zero entries.
struct SmithDecomposition {
  BigMatrix d;
  BigMatrix left;
  BigMatrix right;
  SmithResult result;
};

namespace detail {

inline BigMatrix big_identity(int n) {
  BigMatrix m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline void check_rectangular(const BigMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.front().size())
      throw domain_error("matrix rows must have equal length");
}

}  // namespace detail

/// Smith normal form by elementary row/column operations with
/// smallest-pivot selection, in exact arbitrary-precision arithmetic.
inline SmithDecomposition smith_decompose(BigMatrix m) {
  SmithDecomposition out;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m.front().size()) : 0;
  if (rows) detail::check_rectangular(m);
  out.left = detail::big_identity(rows);
  out.right = detail::big_identity(cols);
  if (rows == 0 || cols == 0) {
    out.d = std::move(m);
    return out;
  }

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    std::swap(out.left[i], out.left[j]);
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (auto& row : m) std::swap(row[i], row[j]);
    for (auto& row : out.right) std::swap(row[i], row[j]);
  };
  auto add_row = [&](int dst, int src, const BigInt& f) {  // row dst += f * row src
    for (int k = 0; k < cols; ++k) m[dst][k] += f * m[src][k];
    for (int k = 0; k < rows; ++k) out.left[dst][k] += f * out.left[src][k];
  };
  auto add_col = [&](int dst, int src, const BigInt& f) {  // col dst += f * col src
    for (int k = 0; k < rows; ++k) m[k][dst] += f * m[k][src];
    for (int k = 0; k < cols; ++k) out.right[k][dst] += f * out.right[k][src];
  };
  auto negate_row = [&](int i) {
    for (auto& v : m[i]) v = -v;
    for (auto& v : out.left[i]) v = -v;
  };

  const int steps = std::min(rows, cols);
  int rank = 0;
  for (int s = 0; s < steps; ++s) {
    // smallest non-zero |entry| of the lower-right submatrix becomes the pivot
    int pi = -1, pj = -1;
    for (int i = s; i < rows; ++i)
      for (int j = s; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pi < 0 || m[i][j].abs() < m[pi][pj].abs()) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    swap_rows(s, pi);
    swap_cols(s, pj);

    for (;;) {
      for (int i = s + 1; i < rows; ++i) {
        if (m[i][s].is_zero()) continue;
        add_row(i, s, -(m[i][s] / m[s][s]));
      }
      for (int j = s + 1; j < cols; ++j) {
        if (m[s][j].is_zero()) continue;
        add_col(j, s, -(m[s][j] / m[s][s]));
      }
      bool lone = true;
      for (int i = s + 1; i < rows && lone; ++i)
        if (!m[i][s].is_zero()) lone = false;
      for (int j = s + 1; j < cols && lone; ++j)
        if (!m[s][j].is_zero()) lone = false;
      if (!lone) {
        // a division left a smaller remainder in the pivot row/column;
        // re-pivot on the smallest entry and keep reducing
        int qi = s, qj = s;
        for (int i = s; i < rows; ++i)
          for (int j = s; j < cols; ++j) {
            if (m[i][j].is_zero()) continue;
            if (m[qi][qj].is_zero() || m[i][j].abs() < m[qi][qj].abs()) {
              qi = i;
              qj = j;
            }
          }
        swap_rows(s, qi);
        swap_cols(s, qj);
        continue;
      }
      // pivot must divide the rest of the submatrix for the factor chain
      int bi = -1;
      for (int i = s + 1; i < rows && bi < 0; ++i)
        for (int j = s + 1; j < cols && bi < 0; ++j)
          if (!(m[i][j] % m[s][s]).is_zero()) bi = i;
      if (bi < 0) break;
      add_row(s, bi, BigInt(1));
    }
    if (m[s][s].sign() < 0) negate_row(s);
    ++rank;
  }

  out.result.rank = rank;
  for (int s = 0; s < rank; ++s) out.result.invariant_factors.push_back(m[s][s]);
  out.d = std::move(m);
  return out;
}

inline SmithResult smith_normal_form(BigMatrix m) {
  return smith_decompose(std::move(m)).result;
}

inline BigMatrix to_big(const IntMatrix& m) {
  BigMatrix b(m.size());
  for (size_t i = 0; i < m.size(); ++i) b[i].assign(m[i].begin(), m[i].end());
  return b;
}

inline SmithResult smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(to_big(m));
}

}  // namespace aspace
