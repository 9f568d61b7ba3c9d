#ifndef BRATTELI_TESTS_GENERATORS_HPP
#define BRATTELI_TESTS_GENERATORS_HPP

#include <random>

#include "bratteli/diagram.hpp"

namespace bratteli::testing {

struct DiagramShape {
  std::size_t max_levels = 8;
  std::size_t max_width = 3;
  long max_size = 40;
  long max_multiplicity = 2;
  long max_slack = 3;
};

/// Random valid diagram: injective maps, nonnegative slack, sizes capped.
inline BratteliDiagram random_diagram(std::mt19937_64& rng, const DiagramShape& shape = {}) {
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto depth = static_cast<std::size_t>(uniform(1, static_cast<long>(shape.max_levels)));
  std::vector<LevelSpec> levels;
  std::vector<MultiplicityMatrix> maps;

  std::vector<BigInt> first;
  const auto w0 = static_cast<std::size_t>(uniform(1, static_cast<long>(shape.max_width)));
  for (std::size_t i = 0; i < w0; ++i) first.emplace_back(uniform(1, 6));
  levels.emplace_back(first);

  while (levels.size() < depth) {
    const auto& prev = levels.back().sizes;
    bool placed = false;
    for (int attempt = 0; attempt < 20 && !placed; ++attempt) {
      const auto w = static_cast<std::size_t>(uniform(1, static_cast<long>(shape.max_width)));
      MultiplicityMatrix k(w, prev.size());
      for (std::size_t j = 0; j < prev.size(); ++j) {
        for (std::size_t i = 0; i < w; ++i) k(i, j) = uniform(0, shape.max_multiplicity);
        if (k.column_is_zero(j)) k(static_cast<std::size_t>(uniform(0, static_cast<long>(w) - 1)), j) = 1;
      }
      std::vector<BigInt> sizes = k.apply(prev);
      bool fits = true;
      for (auto& s : sizes) {
        s += uniform(s == 0 ? 1 : 0, shape.max_slack);
        fits = fits && s <= shape.max_size;
      }
      if (fits) {
        levels.emplace_back(std::move(sizes));
        maps.push_back(std::move(k));
        placed = true;
      }
    }
    if (!placed) break;
  }
  return BratteliDiagram(std::move(levels), std::move(maps));
}

}  // namespace bratteli::testing

#endif  // BRATTELI_TESTS_GENERATORS_HPP
