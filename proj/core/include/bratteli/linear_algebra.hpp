#ifndef BRATTELI_LINEAR_ALGEBRA_HPP
#define BRATTELI_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bratteli/scalar.hpp"

namespace bratteli {

/// Coordinate vector with only nonzero entries stored.
using SparseVector = std::map<std::size_t, GaussianRational>;

/// Adds `scale * v` into `acc`, erasing entries that cancel.
void axpy(SparseVector& acc, const GaussianRational& scale, const SparseVector& v);

/// Incrementally maintained reduced row echelon form over Q(i).
///
/// Rows are kept fully reduced: every pivot column is zero in every other
/// row, and each pivot entry is 1. Equations produced by commutator
/// constraints are very sparse, so elimination stays cheap.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `v` against the current rows.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Adds `v` to the row space; returns false if it was already there.
  bool insert(SparseVector v);

  /// Basis of {x : r.x = 0 for every row r}, one vector per free column.
  std::vector<SparseVector> nullspace() const;

 private:
  std::size_t columns_;
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot column
};

std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t columns);
bool span_contains(const std::vector<SparseVector>& basis, const std::vector<SparseVector>& vectors,
                   std::size_t columns);
bool span_equal(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b,
                std::size_t columns);

/// Sparse rectangular matrix over Q(i).
class SparseMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix unit(std::size_t n, std::size_t row, std::size_t col);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  GaussianRational get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const GaussianRational& v);
  void add(std::size_t r, std::size_t c, const GaussianRational& v);
  const std::map<Key, GaussianRational>& entries() const { return entries_; }

  SparseMatrix adjoint() const;
  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const GaussianRational& s);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  /// Column c as a sparse vector indexed by row.
  SparseVector column(std::size_t c) const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, GaussianRational> entries_;
};

/// Element of a multimatrix algebra M_{n_1} + ... + M_{n_p}, stored block by
/// block.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  explicit BlockMatrix(const std::vector<std::size_t>& block_sizes);
  static BlockMatrix identity(const std::vector<std::size_t>& block_sizes);

  std::size_t block_count() const { return blocks_.size(); }
  std::vector<std::size_t> block_sizes() const;
  const SparseMatrix& block(std::size_t i) const { return blocks_.at(i); }
  SparseMatrix& block(std::size_t i) { return blocks_.at(i); }
  bool is_zero() const;

  BlockMatrix adjoint() const;
  BlockMatrix& operator+=(const BlockMatrix& o);
  BlockMatrix& operator-=(const BlockMatrix& o);
  BlockMatrix& operator*=(const GaussianRational& s);
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

 private:
  std::vector<SparseMatrix> blocks_;
};

}  // namespace bratteli

#endif  // BRATTELI_LINEAR_ALGEBRA_HPP
