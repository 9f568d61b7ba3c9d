#ifndef BRATTELI_PATH_SPACE_HPP
#define BRATTELI_PATH_SPACE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bratteli/diagram.hpp"
#include "bratteli/verification.hpp"

namespace bratteli {

inline constexpr std::size_t kDefaultEnumerationCap = 100000;

/// One of the k^(n)_{i,j} parallel edges from v^n_j to v^{n+1}_i.
struct EdgeId {
  std::size_t level = 0;   // the edge leaves this level
  std::size_t source = 0;  // j
  std::size_t target = 0;  // i
  std::size_t copy = 0;    // 0 <= copy < k^(n)_{i,j}

  VertexRef source_vertex() const { return {level, source}; }
  VertexRef target_vertex() const { return {level + 1, target}; }

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

/// A finite path that starts at `origin` and follows `edges` downward.
/// The empty edge list is the zero-length path at `origin`.
struct Path {
  VertexRef origin;
  std::vector<EdgeId> edges;

  Path() = default;
  explicit Path(VertexRef o) : origin(o) {}
  Path(VertexRef o, std::vector<EdgeId> e) : origin(o), edges(std::move(e)) {}

  std::size_t length() const { return edges.size(); }
  VertexRef range() const { return edges.empty() ? origin : edges.back().target_vertex(); }

  /// True when `other` = this followed by more edges (or equal).
  bool is_prefix_of(const Path& other) const;
  /// The edges of `longer` beyond this path; requires is_prefix_of(longer).
  std::vector<EdgeId> continuation_in(const Path& longer) const;

  Path extended(const EdgeId& e) const;
  Path extended(const std::vector<EdgeId>& more) const;

  /// Structural order used for map keys; not the canonical path order.
  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;

  std::string to_string() const;
};

/// Canonical order among paths with a common range: the zero-length path
/// first, then by origin level, then lexicographically by the edge
/// sequence compared on (source, target, copy).
bool canonical_less(const Path& a, const Path& b);

/// True when consecutive edges compose, copies are in range, and the
/// origin is a pointed vertex.
bool is_valid_path(const BratteliDiagram& d, const PointSet& s, const Path& p);

/// |F^n_i| for n < levels:  F^{n+1}_i = sum_j k^(n)_{i,j} F^n_j + [v^{n+1}_i in S],
/// seeded F^0_i = [v^0_i in S]. `levels` defaults to the whole diagram.
std::vector<std::vector<BigInt>> count_paths(const BratteliDiagram& d, const PointSet& s,
                                             std::optional<std::size_t> levels = std::nullopt);

/// F^n_i in canonical order. Throws Error(CapExceeded) when the count
/// exceeds `cap`.
std::vector<Path> enumerate_paths(const BratteliDiagram& d, const PointSet& s, VertexRef v,
                                  std::size_t cap = kDefaultEnumerationCap);

/// Every F^n_i for n < levels, built level by level. Throws CapExceeded if
/// any single vertex carries more than `cap` paths.
class PathTable {
 public:
  PathTable(const BratteliDiagram& d, const PointSet& s, std::size_t levels,
            std::size_t cap = kDefaultEnumerationCap);

  std::size_t levels() const { return paths_.size(); }
  const std::vector<Path>& at(VertexRef v) const { return paths_.at(v.level).at(v.index); }
  const std::vector<std::vector<Path>>& level(std::size_t n) const { return paths_.at(n); }

  /// Position of `p` within at(p.range()); nullopt if absent.
  std::optional<std::size_t> index_of(const Path& p) const;

 private:
  std::vector<std::vector<std::vector<Path>>> paths_;
};

/// Checks |F^n_i| = [n,i] at every level and reports the first mismatch.
VerificationItem verify_numpaths(const BratteliDiagram& d, const PointSet& s);

}  // namespace bratteli

#endif  // BRATTELI_PATH_SPACE_HPP
