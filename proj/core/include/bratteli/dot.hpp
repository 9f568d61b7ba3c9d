#ifndef BRATTELI_DOT_HPP
#define BRATTELI_DOT_HPP

#include <string>

#include "bratteli/diagram.hpp"

namespace bratteli {

/// Graphviz digraph: one rank per level, nodes "v{n}.{i} [{size}]",
/// pointed vertices as double circles, parallel edges collapsed into one
/// edge labelled with the multiplicity.
std::string to_dot(const BratteliDiagram& d, const PointSet& s = {});

}  // namespace bratteli

#endif  // BRATTELI_DOT_HPP
