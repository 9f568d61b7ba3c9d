#include "bratteli/dot.hpp"

#include <sstream>

namespace bratteli {

std::string to_dot(const BratteliDiagram& d, const PointSet& s) {
  std::ostringstream out;
  out << "digraph bratteli {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t n = 0; n < d.depth(); ++n) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < d.width(n); ++i) {
      const VertexRef v{n, i};
      out << " \"" << v.label() << "\" [label=\"" << v.label() << " [" << d.size(v).get_str() << "]\"";
      if (s.contains(v)) out << ", shape=doublecircle";
      out << "];";
    }
    out << " }\n";
  }
  for (std::size_t n = 0; n + 1 < d.depth(); ++n) {
    const auto& k = d.map(n);
    for (std::size_t j = 0; j < k.cols(); ++j) {
      for (std::size_t i = 0; i < k.rows(); ++i) {
        if (k(i, j) == 0) continue;
        out << "  \"" << VertexRef{n, j}.label() << "\" -> \"" << VertexRef{n + 1, i}.label() << "\"";
        if (k(i, j) != 1) out << " [label=\"" << k(i, j).get_str() << "\"]";
        out << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bratteli
