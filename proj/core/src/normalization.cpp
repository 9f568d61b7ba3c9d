#include "bratteli/normalization.hpp"

#include <algorithm>

namespace bratteli {

std::string_view to_string(Strategy s) {
  return s == Strategy::drinen ? "drinen" : "kumjian";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "drinen") return Strategy::drinen;
  if (name == "kumjian") return Strategy::kumjian;
  throw Error(ErrorCode::SyntaxError,
              "unknown strategy '" + std::string(name) + "' (expected drinen or kumjian)");
}

namespace {

bool is_unit_level(const LevelSpec& level) {
  return level.width() == 1 && level.sizes[0] == 1;
}

/// Slack of the first unrolled tail level, if any.
std::vector<BigInt> tail_slack(const BratteliDiagram& d) {
  if (!d.has_tail()) return {};
  auto unrolled = extend(d, 1);
  return slack(unrolled).back();
}

void check_tail(const BratteliDiagram& d, Strategy strategy) {
  for (const auto& s : tail_slack(d)) {
    bool bad = strategy == Strategy::drinen ? s > 1 : sgn(s) > 0;
    if (bad) {
      throw Error(ErrorCode::TailSlackUnsupported,
                  "periodic tail carries slack " + s.get_str() +
                      " that the " + std::string(to_string(strategy)) +
                      " strategy cannot absorb");
    }
  }
}

std::optional<std::size_t> first_offending_level(const SlackProfile& sigma) {
  for (std::size_t n = 1; n < sigma.size(); ++n) {
    for (const auto& s : sigma[n]) {
      if (s > 1) return n;
    }
  }
  return std::nullopt;
}

NormalizationTrace normalize_drinen(const BratteliDiagram& d) {
  NormalizationTrace trace;
  trace.original_levels.resize(d.depth());
  const bool prepend = !is_unit_level(d.level(0));
  for (std::size_t n = 0; n < d.depth(); ++n) trace.original_levels[n] = n + (prepend ? 1 : 0);

  BratteliDiagram current = prepend_unit_level(d);
  while (auto n = first_offending_level(slack(current))) {
    current = insert_slack_level(current, *n);
    ++trace.insertions;
    for (auto& pos : trace.original_levels) {
      if (pos >= *n) ++pos;
    }
  }
  trace.diagram = std::move(current);
  return trace;
}

NormalizationTrace normalize_kumjian(const BratteliDiagram& d) {
  const SlackProfile sigma = slack(d);
  const std::size_t depth = d.depth();

  // added[n] lists (target index, multiplicity) for the sources appended to
  // output level n; output level 0 is the new top, output level n+1 is input
  // level n.
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> added(depth);
  for (std::size_t n = 0; n < depth; ++n) {
    for (std::size_t i = 0; i < d.width(n); ++i) {
      if (sgn(sigma[n][i]) > 0) added[n].emplace_back(i, sigma[n][i]);
    }
  }

  NormalizationTrace trace;
  std::vector<LevelSpec> levels;
  std::vector<MultiplicityMatrix> maps;

  // Output level k holds the original vertices of input level k-1 (none
  // for k = 0) followed by the sources feeding input level k.
  auto original_width = [&](std::size_t k) -> std::size_t { return k == 0 ? 0 : d.width(k - 1); };
  for (std::size_t k = 0; k <= depth; ++k) {
    LevelSpec level;
    if (k > 0) level = d.level(k - 1);
    if (k < depth) {
      for (std::size_t a = 0; a < added[k].size(); ++a) {
        level.sizes.emplace_back(1);
        trace.added.insert(VertexRef{k, original_width(k) + a});
      }
    }
    levels.push_back(std::move(level));
  }

  for (std::size_t k = 0; k < depth; ++k) {
    const std::size_t rows = levels[k + 1].width();
    const std::size_t cols = levels[k].width();
    MultiplicityMatrix m(rows, cols);
    const std::size_t orig_cols = original_width(k);
    if (k > 0) {
      const auto& old = d.map(k - 1);
      for (std::size_t i = 0; i < old.rows(); ++i) {
        for (std::size_t j = 0; j < old.cols(); ++j) m(i, j) = old(i, j);
      }
    }
    for (std::size_t a = 0; a < added[k].size(); ++a) {
      const auto& [target, mult] = added[k][a];
      m(target, orig_cols + a) = mult;
    }
    maps.push_back(std::move(m));
  }

  trace.original_levels.resize(depth);
  for (std::size_t n = 0; n < depth; ++n) trace.original_levels[n] = n + 1;
  trace.diagram = BratteliDiagram(std::move(levels), std::move(maps), d.tail());
  return trace;
}

}  // namespace

BratteliDiagram prepend_unit_level(const BratteliDiagram& d) {
  require_valid(d);
  if (is_unit_level(d.level(0))) return d;
  std::vector<LevelSpec> levels;
  levels.reserve(d.depth() + 1);
  levels.emplace_back(LevelSpec{1});
  levels.insert(levels.end(), d.levels().begin(), d.levels().end());

  std::vector<MultiplicityMatrix> maps;
  maps.reserve(d.maps().size() + 1);
  MultiplicityMatrix unital(d.width(0), 1);
  for (std::size_t i = 0; i < d.width(0); ++i) unital(i, 0) = d.level(0).sizes[i];
  maps.push_back(std::move(unital));
  maps.insert(maps.end(), d.maps().begin(), d.maps().end());
  return BratteliDiagram(std::move(levels), std::move(maps), d.tail());
}

BratteliDiagram insert_slack_level(const BratteliDiagram& d, std::size_t n) {
  require_valid(d);
  if (n == 0 || n >= d.depth()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "insert_slack_level: level " + std::to_string(n + 1) + " is not below the top");
  }
  const SlackProfile sigma = slack(d);
  LevelSpec shrunk = d.level(n);
  bool any = false;
  for (std::size_t k = 0; k < shrunk.width(); ++k) {
    if (sigma[n][k] > 1) {
      shrunk.sizes[k] -= 1;
      any = true;
    }
  }
  if (!any) {
    throw Error(ErrorCode::NoExcessSlack,
                "no vertex at level " + std::to_string(n + 1) + " has slack above 1");
  }

  std::vector<LevelSpec> levels = d.levels();
  levels.insert(levels.begin() + static_cast<std::ptrdiff_t>(n), std::move(shrunk));

  std::vector<MultiplicityMatrix> maps = d.maps();
  // maps[n-1] now feeds the inserted level; the inclusion follows it.
  maps.insert(maps.begin() + static_cast<std::ptrdiff_t>(n),
              MultiplicityMatrix::identity(d.width(n)));
  return BratteliDiagram(std::move(levels), std::move(maps), d.tail());
}

NormalizationTrace normalize_traced(const BratteliDiagram& d, Strategy strategy) {
  require_valid(d);
  check_tail(d, strategy);
  if (strategy == Strategy::drinen) return normalize_drinen(d);
  if (is_normalized(d, Strategy::kumjian)) {
    NormalizationTrace trace{d, {}, compute_point_set(d, Strategy::kumjian), 0};
    for (std::size_t n = 0; n < d.depth(); ++n) trace.original_levels.push_back(n);
    return trace;
  }
  return normalize_kumjian(d);
}

BratteliDiagram normalize(const BratteliDiagram& d, Strategy strategy) {
  return normalize_traced(d, strategy).diagram;
}

bool is_normalized(const BratteliDiagram& d, Strategy strategy) {
  if (!validate(d)) return false;
  const SlackProfile sigma = slack(d);
  if (strategy == Strategy::drinen) {
    if (!is_unit_level(d.level(0))) return false;
    return !first_offending_level(sigma).has_value();
  }
  for (std::size_t n = 0; n < d.depth(); ++n) {
    for (std::size_t i = 0; i < d.width(n); ++i) {
      const bool source = d.in_degree({n, i}) == 0;
      if (source ? d.level(n).sizes[i] != 1 : sgn(sigma[n][i]) != 0) return false;
    }
  }
  return true;
}

PointSet compute_point_set(const BratteliDiagram& d, Strategy strategy) {
  if (!is_normalized(d, strategy)) {
    throw Error(ErrorCode::NotNormalized,
                "diagram is not " + std::string(to_string(strategy)) + "-normalized");
  }
  PointSet s;
  if (strategy == Strategy::drinen) {
    const SlackProfile sigma = slack(d);
    s.insert({0, 0});
    for (std::size_t n = 1; n < d.depth(); ++n) {
      for (std::size_t i = 0; i < d.width(n); ++i) {
        if (sigma[n][i] == 1) s.insert({n, i});
      }
    }
    return s;
  }
  for (std::size_t n = 0; n < d.depth(); ++n) {
    for (std::size_t i = 0; i < d.width(n); ++i) {
      if (d.in_degree({n, i}) == 0) s.insert({n, i});
    }
  }
  return s;
}

BigInt excess_slack(const BratteliDiagram& d) {
  const SlackProfile sigma = slack(d);
  BigInt total = 0;
  for (std::size_t n = 1; n < sigma.size(); ++n) {
    for (const auto& s : sigma[n]) {
      if (s > 1) total += s - 1;
    }
  }
  return total;
}

}  // namespace bratteli
