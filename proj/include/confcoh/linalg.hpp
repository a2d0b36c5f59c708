#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "confcoh/rational.hpp"

namespace confcoh {

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (long v : row) data_.emplace_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> kernel;  // basis of {x : A x = 0}
  std::vector<std::size_t> pivot_columns;
};

/// Rank, right kernel and pivot columns by fraction-free (Bareiss)
/// elimination. Rows are first cleared of denominators; the pivot in each
/// column is the first entry of maximal absolute value among the remaining
/// rows. Every intermediate division is exact.
inline RankResult exact_rank(const Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j).get_num() * (den / a(i, j).get_den());
  }

  RankResult res;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      if (piv == rows || abs(m[i][col]) > abs(m[piv][col])) piv = i;
    }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    res.pivot_columns.push_back(col);
    ++r;
  }
  res.rank = r;

  std::vector<bool> is_pivot(cols, false);
  for (auto c : res.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    for (std::size_t k = r; k-- > 0;) {
      std::size_t pc = res.pivot_columns[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0 && m[k][j] != 0) s += Rational(m[k][j]) * x[j];
      x[pc] = -s / Rational(m[k][pc]);
    }
    res.kernel.push_back(std::move(x));
  }
  return res;
}

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incrementally built echelon basis of a subspace of ℚ^N with sparse rows.
/// Each stored row has leading coefficient 1 at a distinct pivot index.
class EchelonBasis {
 public:
  std::size_t rank() const { return rows_.size(); }

  SparseVector reduce(const SparseVector& v) const {
    std::map<std::size_t, Rational> w(v.begin(), v.end());
    reduce_in_place(w, SIZE_MAX);
    return {w.begin(), w.end()};
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Returns true if v was independent of the current rows.
  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    store(std::move(r));
    return true;
  }

  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

 private:
  friend std::vector<SparseVector> sparse_kernel(const std::vector<SparseVector>&, std::size_t);

  // Eliminates pivot positions below `limit` from w.
  void reduce_in_place(std::map<std::size_t, Rational>& w, std::size_t limit) const {
    for (auto it = w.begin(); it != w.end() && it->first < limit;) {
      auto b = rows_.find(it->first);
      if (b == rows_.end()) {
        ++it;
        continue;
      }
      const Rational f = it->second;
      for (const auto& [idx, c] : b->second) {
        if (idx == it->first) continue;
        auto [jt, inserted] = w.try_emplace(idx, -f * c);
        if (!inserted) {
          jt->second -= f * c;
          if (jt->second == 0) w.erase(jt);
        }
      }
      it = w.erase(it);
    }
  }

  void store(SparseVector r) {
    Rational lead = r.front().second;
    if (lead != 1)
      for (auto& [i, c] : r) c /= lead;
    std::size_t p = r.front().first;
    rows_.emplace(p, std::move(r));
  }

  std::map<std::size_t, SparseVector> rows_;
};

/// Basis of the right kernel of the matrix whose j-th column is columns[j]
/// (row indices < nrows). Kernel vectors are indexed by column.
inline std::vector<SparseVector> sparse_kernel(const std::vector<SparseVector>& columns, std::size_t nrows) {
  EchelonBasis basis;
  std::vector<SparseVector> kernel;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    std::map<std::size_t, Rational> w;
    for (const auto& [i, c] : columns[j]) {
      if (i >= nrows) throw std::out_of_range("sparse_kernel: row index out of range");
      w.emplace(i, c);
    }
    w.emplace(nrows + j, 1);
    basis.reduce_in_place(w, nrows);
    if (w.begin()->first >= nrows) {
      SparseVector k;
      for (const auto& [i, c] : w) k.emplace_back(i - nrows, c);
      kernel.push_back(std::move(k));
    } else {
      basis.store({w.begin(), w.end()});
    }
  }
  return kernel;
}

inline std::size_t sparse_rank(const std::vector<SparseVector>& vectors) {
  EchelonBasis b;
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

inline SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.emplace_back(i, dense[i]);
  return v;
}

}  // namespace confcoh
