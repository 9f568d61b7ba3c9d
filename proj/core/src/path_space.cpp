#include "bratteli/path_space.hpp"

#include <algorithm>
#include <sstream>

namespace bratteli {

bool Path::is_prefix_of(const Path& other) const {
  if (origin != other.origin || edges.size() > other.edges.size()) return false;
  return std::equal(edges.begin(), edges.end(), other.edges.begin());
}

std::vector<EdgeId> Path::continuation_in(const Path& longer) const {
  return {longer.edges.begin() + static_cast<std::ptrdiff_t>(edges.size()), longer.edges.end()};
}

Path Path::extended(const EdgeId& e) const {
  Path p = *this;
  p.edges.push_back(e);
  return p;
}

Path Path::extended(const std::vector<EdgeId>& more) const {
  Path p = *this;
  p.edges.insert(p.edges.end(), more.begin(), more.end());
  return p;
}

std::string Path::to_string() const {
  std::ostringstream os;
  os << origin.label();
  for (const auto& e : edges) {
    os << " -" << (e.copy + 1) << "-> " << e.target_vertex().label();
  }
  return os.str();
}

bool canonical_less(const Path& a, const Path& b) {
  if (a.edges.empty() != b.edges.empty()) return a.edges.empty();
  if (a.origin.level != b.origin.level) return a.origin.level < b.origin.level;
  auto key = [](const EdgeId& e) { return std::tie(e.source, e.target, e.copy); };
  return std::lexicographical_compare(
      a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
      [&](const EdgeId& x, const EdgeId& y) { return key(x) < key(y); });
}

bool is_valid_path(const BratteliDiagram& d, const PointSet& s, const Path& p) {
  if (!s.contains(p.origin)) return false;
  if (p.origin.level >= d.depth() || p.origin.index >= d.width(p.origin.level)) return false;
  VertexRef at = p.origin;
  for (const auto& e : p.edges) {
    if (e.level != at.level || e.source != at.index) return false;
    if (e.level + 1 >= d.depth() || e.target >= d.width(e.level + 1)) return false;
    if (BigInt(static_cast<unsigned long>(e.copy)) >= d.map(e.level)(e.target, e.source)) return false;
    at = e.target_vertex();
  }
  return true;
}

std::vector<std::vector<BigInt>> count_paths(const BratteliDiagram& d, const PointSet& s,
                                             std::optional<std::size_t> levels) {
  const std::size_t depth = std::min(levels.value_or(d.depth()), d.depth());
  std::vector<std::vector<BigInt>> counts;
  counts.reserve(depth);
  for (std::size_t n = 0; n < depth; ++n) {
    std::vector<BigInt> row = n == 0 ? std::vector<BigInt>(d.width(0), BigInt(0))
                                     : d.map(n - 1).apply(counts.back());
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (s.contains({n, i})) row[i] += 1;
    }
    counts.push_back(std::move(row));
  }
  return counts;
}

namespace {

std::size_t edge_multiplicity(const BratteliDiagram& d, std::size_t level, std::size_t target,
                              std::size_t source) {
  auto k = to_size(d.map(level)(target, source));
  if (!k) {
    throw Error(ErrorCode::CapExceeded, "edge multiplicity too large to enumerate");
  }
  return *k;
}

/// Builds F(v) for every vertex with `wanted[n][i]` set, level by level.
std::vector<std::vector<std::vector<Path>>> build_paths(
    const BratteliDiagram& d, const PointSet& s, std::size_t levels,
    const std::vector<std::vector<bool>>& wanted) {
  std::vector<std::vector<std::vector<Path>>> table(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    table[n].resize(d.width(n));
    for (std::size_t i = 0; i < d.width(n); ++i) {
      if (!wanted[n][i]) continue;
      auto& out = table[n][i];
      if (s.contains({n, i})) out.emplace_back(VertexRef{n, i});
      if (n == 0) continue;
      for (std::size_t j = 0; j < d.width(n - 1); ++j) {
        const std::size_t k = edge_multiplicity(d, n - 1, i, j);
        for (std::size_t c = 0; c < k; ++c) {
          const EdgeId e{n - 1, j, i, c};
          for (const auto& alpha : table[n - 1][j]) out.push_back(alpha.extended(e));
        }
      }
      std::sort(out.begin(), out.end(), canonical_less);
    }
  }
  return table;
}

void check_cap(const BigInt& count, std::size_t cap, VertexRef v) {
  if (count > BigInt(static_cast<unsigned long>(cap))) {
    throw Error(ErrorCode::CapExceeded, "vertex " + v.label() + " carries " + count.get_str() +
                                            " paths, above the enumeration cap " +
                                            std::to_string(cap));
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const BratteliDiagram& d, const PointSet& s, VertexRef v,
                                  std::size_t cap) {
  if (v.level >= d.depth() || v.index >= d.width(v.level)) {
    throw Error(ErrorCode::IndexOutOfRange, "no vertex " + v.label());
  }
  const auto counts = count_paths(d, s, v.level + 1);
  check_cap(counts[v.level][v.index], cap, v);

  // Only ancestors of v are needed; each carries at most as many paths as v.
  std::vector<std::vector<bool>> wanted(v.level + 1);
  for (std::size_t n = 0; n <= v.level; ++n) wanted[n].assign(d.width(n), false);
  wanted[v.level][v.index] = true;
  for (std::size_t n = v.level; n > 0; --n) {
    for (std::size_t i = 0; i < d.width(n); ++i) {
      if (!wanted[n][i]) continue;
      for (std::size_t j = 0; j < d.width(n - 1); ++j) {
        if (sgn(d.map(n - 1)(i, j)) > 0) wanted[n - 1][j] = true;
      }
    }
  }
  auto table = build_paths(d, s, v.level + 1, wanted);
  return std::move(table[v.level][v.index]);
}

PathTable::PathTable(const BratteliDiagram& d, const PointSet& s, std::size_t levels,
                     std::size_t cap) {
  if (levels > d.depth()) {
    throw Error(ErrorCode::IndexOutOfRange, "PathTable: requested " + std::to_string(levels) +
                                                " levels of a depth-" +
                                                std::to_string(d.depth()) + " diagram");
  }
  const auto counts = count_paths(d, s, levels);
  std::vector<std::vector<bool>> wanted(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    wanted[n].assign(d.width(n), true);
    for (std::size_t i = 0; i < d.width(n); ++i) check_cap(counts[n][i], cap, {n, i});
  }
  paths_ = build_paths(d, s, levels, wanted);
}

std::optional<std::size_t> PathTable::index_of(const Path& p) const {
  const VertexRef r = p.range();
  if (r.level >= paths_.size() || r.index >= paths_[r.level].size()) return std::nullopt;
  const auto& list = paths_[r.level][r.index];
  auto it = std::lower_bound(list.begin(), list.end(), p, canonical_less);
  if (it == list.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

VerificationItem verify_numpaths(const BratteliDiagram& d, const PointSet& s) {
  VerificationItem item{"numpaths", true, std::nullopt, ""};
  const auto counts = count_paths(d, s);
  for (std::size_t n = 0; n < d.depth(); ++n) {
    for (std::size_t i = 0; i < d.width(n); ++i) {
      if (counts[n][i] != d.level(n).sizes[i]) {
        item.ok = false;
        item.level = n;
        item.detail = "|F| at " + VertexRef{n, i}.label() + " is " + counts[n][i].get_str() +
                      " but the size is " + d.level(n).sizes[i].get_str();
        return item;
      }
    }
  }
  item.detail = "path counts equal sizes at all " + std::to_string(d.depth()) + " levels";
  return item;
}

}  // namespace bratteli
