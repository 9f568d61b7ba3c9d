#include "bratteli/linear_algebra.hpp"

#include "bratteli/error.hpp"

namespace bratteli {

void axpy(SparseVector& acc, const GaussianRational& scale, const SparseVector& v) {
  if (scale.is_zero()) return;
  for (const auto& [col, value] : v) {
    auto [it, inserted] = acc.try_emplace(col, scale * value);
    if (!inserted) {
      it->second += scale * value;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

SparseVector RowEchelon::reduce(SparseVector v) const {
  // Each pivot row is zero in every other pivot column, so reducing by one
  // pivot never disturbs the coefficient of another.
  std::vector<std::size_t> hit;
  for (const auto& [col, value] : v) {
    if (rows_.count(col)) hit.push_back(col);
  }
  for (std::size_t pivot : hit) {
    GaussianRational factor = -v.at(pivot);
    axpy(v, factor, rows_.at(pivot));
  }
  return v;
}

bool RowEchelon::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const GaussianRational lead = v.begin()->second;
  if (!lead.is_one()) {
    for (auto& [col, value] : v) value /= lead;
  }
  for (auto& [other_pivot, row] : rows_) {
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    GaussianRational factor = -it->second;
    axpy(row, factor, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVector> RowEchelon::nullspace() const {
  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (rows_.count(free)) continue;
    SparseVector x;
    x.emplace(free, GaussianRational(1));
    for (const auto& [pivot, row] : rows_) {
      auto it = row.find(free);
      if (it != row.end()) x.emplace(pivot, -it->second);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t columns) {
  RowEchelon e(columns);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

bool span_contains(const std::vector<SparseVector>& basis, const std::vector<SparseVector>& vectors,
                   std::size_t columns) {
  RowEchelon e(columns);
  for (const auto& v : basis) e.insert(v);
  for (const auto& v : vectors) {
    if (!e.contains(v)) return false;
  }
  return true;
}

bool span_equal(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b,
                std::size_t columns) {
  return span_contains(a, b, columns) && span_contains(b, a, columns);
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_.emplace(Key{i, i}, GaussianRational(1));
  return m;
}

SparseMatrix SparseMatrix::unit(std::size_t n, std::size_t row, std::size_t col) {
  SparseMatrix m(n, n);
  m.set(row, col, GaussianRational(1));
  return m;
}

GaussianRational SparseMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? GaussianRational() : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const GaussianRational& v) {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "SparseMatrix::set out of range");
  }
  if (v.is_zero()) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = v;
  }
}

void SparseMatrix::add(std::size_t r, std::size_t c, const GaussianRational& v) {
  if (v.is_zero()) return;
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorCode::IndexOutOfRange, "SparseMatrix::add out of range");
  }
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

SparseMatrix SparseMatrix::adjoint() const {
  SparseMatrix m(cols_, rows_);
  for (const auto& [key, value] : entries_) {
    m.entries_.emplace(Key{key.second, key.first}, value.conj());
  }
  return m;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "SparseMatrix sum size mismatch");
  }
  for (const auto& [key, value] : o.entries_) add(key.first, key.second, value);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "SparseMatrix difference size mismatch");
  }
  for (const auto& [key, value] : o.entries_) add(key.first, key.second, -value);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, value] : entries_) value *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "SparseMatrix product size mismatch");
  }
  SparseMatrix c(a.rows_, b.cols_);
  for (const auto& [ak, av] : a.entries_) {
    auto it = b.entries_.lower_bound({ak.second, 0});
    for (; it != b.entries_.end() && it->first.first == ak.second; ++it) {
      c.add(ak.first, it->first.second, av * it->second);
    }
  }
  return c;
}

SparseVector SparseMatrix::column(std::size_t c) const {
  SparseVector v;
  for (const auto& [key, value] : entries_) {
    if (key.second == c) v.emplace(key.first, value);
  }
  return v;
}

std::size_t SparseMatrix::rank() const {
  std::vector<SparseVector> rows(rows_);
  for (const auto& [key, value] : entries_) rows[key.first].emplace(key.second, value);
  return bratteli::rank(rows, cols_);
}

BlockMatrix::BlockMatrix(const std::vector<std::size_t>& block_sizes) {
  blocks_.reserve(block_sizes.size());
  for (auto n : block_sizes) blocks_.emplace_back(n, n);
}

BlockMatrix BlockMatrix::identity(const std::vector<std::size_t>& block_sizes) {
  BlockMatrix m;
  for (auto n : block_sizes) m.blocks_.push_back(SparseMatrix::identity(n));
  return m;
}

std::vector<std::size_t> BlockMatrix::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(b.rows());
  return sizes;
}

bool BlockMatrix::is_zero() const {
  for (const auto& b : blocks_) {
    if (!b.is_zero()) return false;
  }
  return true;
}

BlockMatrix BlockMatrix::adjoint() const {
  BlockMatrix m;
  m.blocks_.reserve(blocks_.size());
  for (const auto& b : blocks_) m.blocks_.push_back(b.adjoint());
  return m;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  if (blocks_.size() != o.blocks_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "BlockMatrix block count mismatch");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += o.blocks_[i];
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o) {
  if (blocks_.size() != o.blocks_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "BlockMatrix block count mismatch");
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= o.blocks_[i];
  return *this;
}

BlockMatrix& BlockMatrix::operator*=(const GaussianRational& s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.blocks_.size() != b.blocks_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "BlockMatrix block count mismatch");
  }
  BlockMatrix c;
  c.blocks_.reserve(a.blocks_.size());
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) c.blocks_.push_back(a.blocks_[i] * b.blocks_[i]);
  return c;
}

}  // namespace bratteli
