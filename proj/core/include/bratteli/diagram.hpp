#ifndef BRATTELI_DIAGRAM_HPP
#define BRATTELI_DIAGRAM_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bratteli/error.hpp"
#include "bratteli/scalar.hpp"

// Levels and vertices are 0-based throughout the C++ API. Text formats
// (bd1, DOT, JSON reports) use the 1-based labels v{n}.{i}.

namespace bratteli {

/// Sizes [n,1], ..., [n,p_n] of the simple summands at one level.
struct LevelSpec {
  std::vector<BigInt> sizes;

  LevelSpec() = default;
  LevelSpec(std::vector<BigInt> s) : sizes(std::move(s)) {}  // NOLINT
  LevelSpec(std::initializer_list<long> s);

  std::size_t width() const { return sizes.size(); }
  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

/// Dense nonnegative integer matrix K; entry (i, j) counts edges from
/// vertex j of the source level to vertex i of the target level.
class MultiplicityMatrix {
 public:
  MultiplicityMatrix() = default;
  MultiplicityMatrix(std::size_t rows, std::size_t cols);
  MultiplicityMatrix(std::initializer_list<std::initializer_list<long>> rows);
  explicit MultiplicityMatrix(std::vector<std::vector<BigInt>> rows);

  static MultiplicityMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  BigInt& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::vector<BigInt> row(std::size_t i) const;
  bool column_is_zero(std::size_t j) const;
  bool row_is_zero(std::size_t i) const;

  /// K v.
  std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

  /// Throws Error(DimensionMismatch) unless a.cols() == b.rows().
  friend MultiplicityMatrix operator*(const MultiplicityMatrix& a,
                                      const MultiplicityMatrix& b);
  friend bool operator==(const MultiplicityMatrix&,
                         const MultiplicityMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

struct VertexRef {
  std::size_t level = 0;
  std::size_t index = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  /// "v{level+1}.{index+1}"
  std::string label() const;
};

/// The distinguished vertex set S of a pointed diagram.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::initializer_list<VertexRef> members) : members_(members) {}
  explicit PointSet(std::set<VertexRef> members) : members_(std::move(members)) {}

  bool contains(VertexRef v) const { return members_.count(v) != 0; }
  void insert(VertexRef v) { members_.insert(v); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::size_t count_at_level(std::size_t level) const;

  const std::set<VertexRef>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::set<VertexRef> members_;
};

/// sigma[n][i]; signed so that an invalid diagram can still be inspected.
using SlackProfile = std::vector<std::vector<BigInt>>;

/// A finite truncation of a Bratteli diagram, optionally followed by a
/// periodic tail matrix applied forever after the last level.
///
/// Construction performs no checks; call validate() before relying on the
/// invariants. Operations that require a valid diagram throw Error with
/// the code of the first violated invariant.
class BratteliDiagram {
 public:
  BratteliDiagram() = default;
  BratteliDiagram(std::vector<LevelSpec> levels,
                  std::vector<MultiplicityMatrix> maps,
                  std::optional<MultiplicityMatrix> tail = std::nullopt)
      : levels_(std::move(levels)), maps_(std::move(maps)), tail_(std::move(tail)) {}

  std::size_t depth() const { return levels_.size(); }
  const std::vector<LevelSpec>& levels() const { return levels_; }
  const LevelSpec& level(std::size_t n) const { return levels_.at(n); }
  std::size_t width(std::size_t n) const { return levels_.at(n).width(); }
  const BigInt& size(VertexRef v) const { return levels_.at(v.level).sizes.at(v.index); }

  /// Map from level n to level n+1.
  const std::vector<MultiplicityMatrix>& maps() const { return maps_; }
  const MultiplicityMatrix& map(std::size_t n) const { return maps_.at(n); }

  const std::optional<MultiplicityMatrix>& tail() const { return tail_; }
  bool has_tail() const { return tail_.has_value(); }

  /// Number of edges with target v (v.level > 0).
  BigInt in_degree(VertexRef v) const;
  /// Total number of edges from level n-1 into level n.
  BigInt edges_into(std::size_t n) const;

  friend bool operator==(const BratteliDiagram&, const BratteliDiagram&) = default;

 private:
  std::vector<LevelSpec> levels_;
  std::vector<MultiplicityMatrix> maps_;
  std::optional<MultiplicityMatrix> tail_;
};

struct ValidationResult {
  std::optional<ErrorCode> error;  // nullopt means OK
  std::optional<VertexRef> location;
  std::string message;

  bool ok() const { return !error.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Checks every structural invariant and reports the first violation.
ValidationResult validate(const BratteliDiagram& d);

/// Throws Error carrying the first violated invariant.
void require_valid(const BratteliDiagram& d);

/// sigma^1_i = [1,i]; sigma^n_i = [n,i] - sum_j k^(n-1)_{i,j} [n-1,j].
/// Computed without validation beyond matching dimensions.
SlackProfile slack(const BratteliDiagram& d);

/// Multiplicity matrix of the composite map from level `from` to level `to`:
/// K^(to-1) ... K^(from). `from == to` yields the identity.
MultiplicityMatrix telescope(const BratteliDiagram& d, std::size_t from,
                             std::size_t to);

/// Appends `count` levels by applying the tail matrix to the last sizes.
BratteliDiagram extend(const BratteliDiagram& d, std::size_t count);

/// The truncation used by analysis commands: the explicit levels plus
/// `unrollings` tail applications when a tail is present.
BratteliDiagram analysis_truncation(const BratteliDiagram& d,
                                    std::size_t unrollings = 3);

/// Returns the first `levels` levels (and the maps between them).
/// The tail is dropped unless the cut keeps every explicit level.
BratteliDiagram truncate(const BratteliDiagram& d, std::size_t levels);

}  // namespace bratteli

#endif  // BRATTELI_DIAGRAM_HPP
