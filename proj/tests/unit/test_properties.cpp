#include <gtest/gtest.h>

#include <random>

#include "bratteli/bd1.hpp"
#include "bratteli/cylinder_algebra.hpp"
#include "bratteli/normalization.hpp"
#include "bratteli/path_space.hpp"
#include "bratteli/sampling.hpp"
#include "generators.hpp"

using namespace bratteli;
using bratteli::testing::random_diagram;

TEST(Properties, GeneratorProducesValidDiagrams) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    auto d = random_diagram(rng);
    auto v = validate(d);
    EXPECT_TRUE(v.ok()) << v.message;
  }
}

TEST(Properties, SlackIdentity) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    auto sigma = slack(d);
    EXPECT_EQ(sigma[0], d.level(0).sizes);
    for (std::size_t n = 1; n < d.depth(); ++n) {
      auto consumed = d.map(n - 1).apply(d.level(n - 1).sizes);
      for (std::size_t i = 0; i < d.width(n); ++i) EXPECT_EQ(d.level(n).sizes[i], sigma[n][i] + consumed[i]);
    }
  }
}

TEST(Properties, TelescopeAssociative) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    const std::size_t depth = d.depth();
    for (std::size_t a = 0; a < depth; ++a) {
      for (std::size_t b = a; b < depth; ++b) {
        for (std::size_t c = b; c < depth; ++c) {
          EXPECT_EQ(telescope(d, a, c), telescope(d, b, c) * telescope(d, a, b));
        }
      }
    }
  }
}

TEST(Properties, DrinenNormalization) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    auto trace = normalize_traced(d, Strategy::drinen);
    const auto& n = trace.diagram;
    ASSERT_TRUE(validate(n).ok());
    auto sigma = slack(n);
    for (std::size_t k = 1; k < n.depth(); ++k) {
      for (const auto& s : sigma[k]) EXPECT_LE(s, 1);
    }
    // one insertion lowers every offending vertex of its level at once
    const auto start = slack(prepend_unit_level(d));
    BigInt needed = 0;
    for (std::size_t k = 1; k < start.size(); ++k) {
      BigInt worst = 1;
      for (const auto& s : start[k]) worst = std::max(worst, BigInt(s));
      needed += worst - 1;
    }
    EXPECT_EQ(BigInt(trace.insertions), needed);
    EXPECT_LE(BigInt(trace.insertions), excess_slack(prepend_unit_level(d)));
    for (std::size_t k = 0; k + 1 < d.depth(); ++k) {
      EXPECT_EQ(telescope(n, trace.original_levels[k], trace.original_levels[k + 1]), d.map(k));
      EXPECT_EQ(n.level(trace.original_levels[k]), d.level(k));
    }
    auto s = compute_point_set(n, Strategy::drinen);
    EXPECT_TRUE(verify_numpaths(n, s).ok);
    EXPECT_EQ(normalize(n, Strategy::drinen), n);
  }
}

TEST(Properties, KumjianNormalization) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    auto trace = normalize_traced(d, Strategy::kumjian);
    const auto& k = trace.diagram;
    ASSERT_TRUE(validate(k).ok());
    auto s = compute_point_set(k, Strategy::kumjian);
    EXPECT_EQ(s, trace.added);
    EXPECT_TRUE(verify_numpaths(k, s).ok);
    // original maps survive as the top-left block
    for (std::size_t n = 0; n + 1 < d.depth(); ++n) {
      const auto& big = k.map(trace.original_levels[n]);
      const auto& orig = d.map(n);
      for (std::size_t i = 0; i < orig.rows(); ++i) {
        for (std::size_t j = 0; j < orig.cols(); ++j) EXPECT_EQ(big(i, j), orig(i, j));
      }
    }
  }
}

TEST(Properties, Bd1RoundTrip) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    std::optional<PointSet> s;
    if (t % 2) s = compute_point_set(normalize(d, Strategy::drinen), Strategy::drinen);
    auto n = t % 2 ? normalize(d, Strategy::drinen) : d;
    auto doc = parse_bd1(serialize_bd1(n, s));
    EXPECT_EQ(doc.diagram, n);
    EXPECT_EQ(doc.points, s);
  }
}

TEST(Properties, EmbedIsStarHomomorphism) {
  std::mt19937_64 rng(7);
  bratteli::testing::DiagramShape small;
  small.max_levels = 4;
  small.max_size = 12;
  int checked = 0;
  while (checked < 100) {
    auto d = normalize(random_diagram(rng, small), Strategy::drinen);
    auto s = compute_point_set(d, Strategy::drinen);
    if (d.depth() < 2) continue;
    std::uniform_int_distribution<std::size_t> level(0, d.depth() - 2);
    const std::size_t n = level(rng);
    MatrixRealization here(d, s, n), next(d, s, n + 1);
    auto x = random_element(here, rng);
    auto y = random_element(here, rng);
    EXPECT_EQ(embed(d, x * y), embed(d, x) * embed(d, y));
    EXPECT_EQ(embed(d, adjoint(x)), adjoint(embed(d, x)));
    EXPECT_EQ(here.realize(x * y), here.realize(x) * here.realize(y));
    EXPECT_EQ(here.realize(adjoint(x)), here.realize(x).adjoint());
    EXPECT_EQ(multiply(x, embed(d, y)), multiply_at_common_level(d, x, embed(d, y)));
    ++checked;
  }
}
