#ifndef BRATTELI_BD1_HPP
#define BRATTELI_BD1_HPP

#include <optional>
#include <string>
#include <string_view>

#include "bratteli/diagram.hpp"

// bd1 text format, line oriented; '#' starts a comment, blank lines are
// ignored:
//
//   bd1
//   sizes: 3 5
//   k: 1 1 ; 0 2          rows = next-level vertices
//   sizes: 11 10
//   tail: 1 1 ; 1 1       optional, square
//   point: 1:1 2:2        optional, 1-based level:vertex

namespace bratteli {

struct Bd1Document {
  BratteliDiagram diagram;
  std::optional<PointSet> points;
};

/// Throws Error(SyntaxError) with "line L, column C: ..." on malformed
/// input and Error(SemanticError) when the diagram fails validate() or a
/// point names a missing vertex.
Bd1Document parse_bd1(std::string_view text);

/// Canonical text; parse_bd1(serialize_bd1(d, s)) reproduces (d, s).
std::string serialize_bd1(const BratteliDiagram& d, const std::optional<PointSet>& points = std::nullopt);

}  // namespace bratteli

#endif  // BRATTELI_BD1_HPP
