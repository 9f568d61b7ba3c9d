#ifndef BRATTELI_NORMALIZATION_HPP
#define BRATTELI_NORMALIZATION_HPP

#include <string_view>
#include <vector>

#include "bratteli/diagram.hpp"

namespace bratteli {

enum class Strategy {
  /// Prepend a one-dimensional level, then shrink slack by inserting levels
  /// until every vertex below the top has slack at most one. Pointed at the
  /// slack-one vertices together with the top vertex.
  drinen,
  /// Leave the original levels alone and add a pointed source vertex for
  /// every slack-carrying vertex, one level up.
  kumjian,
};

std::string_view to_string(Strategy s);
/// Accepts "drinen" and "kumjian"; throws Error(SyntaxError) otherwise.
Strategy parse_strategy(std::string_view name);

/// Adds a level (1) in front with the unique unital map into the old first
/// level. A diagram whose first level is already (1) is returned unchanged.
BratteliDiagram prepend_unit_level(const BratteliDiagram& d);

/// Inserts a level in front of level `n` (n >= 1) in which every vertex with
/// slack above one is shrunk by one. The map into the new level is the old
/// map K^(n-1); the map out of it is the identity.
///
/// Throws Error(NoExcessSlack) if no vertex at level n has slack above one.
BratteliDiagram insert_slack_level(const BratteliDiagram& d, std::size_t n);

struct NormalizationTrace {
  BratteliDiagram diagram;
  /// Position of each input level in the output diagram.
  std::vector<std::size_t> original_levels;
  /// Vertices added by Kumjian augmentation (empty for drinen).
  PointSet added;
  /// Number of insert_slack_level applications (drinen only).
  std::size_t insertions = 0;
};

NormalizationTrace normalize_traced(const BratteliDiagram& d, Strategy strategy);

BratteliDiagram normalize(const BratteliDiagram& d, Strategy strategy);

/// True when `d` already satisfies the output conditions of `strategy`.
bool is_normalized(const BratteliDiagram& d, Strategy strategy);

/// drinen: {v : sigma(v) = 1} together with the top vertex.
/// kumjian: the source vertices (exactly the augmentation vertices).
///
/// Throws Error(NotNormalized) when `d` fails is_normalized().
PointSet compute_point_set(const BratteliDiagram& d, Strategy strategy);

/// Sum over all vertices below the top of max(0, sigma - 1).
BigInt excess_slack(const BratteliDiagram& d);

}  // namespace bratteli

#endif  // BRATTELI_NORMALIZATION_HPP
