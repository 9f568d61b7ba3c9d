#include "bratteli/sampling.hpp"

namespace bratteli {

GaussianRational random_scalar(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  std::uniform_int_distribution<int> coin(0, 2);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  if (coin(rng) == 0) return GaussianRational(re);
  Rational im(num(rng), den(rng));
  im.canonicalize();
  return {re, im};
}

AlgebraElement random_element(const MatrixRealization& level, std::mt19937_64& rng,
                              std::size_t terms) {
  AlgebraElement x;
  const std::size_t dim = level.dimension();
  if (dim == 0) return x;
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  std::uniform_int_distribution<std::size_t> count(0, terms);
  const std::size_t n = count(rng);
  for (std::size_t t = 0; t < n; ++t) x.add_term(level.generator_at(pick(rng)), random_scalar(rng));
  return x;
}

}  // namespace bratteli
