#include <gtest/gtest.h>

#include "bratteli/normalization.hpp"
#include "bratteli/path_space.hpp"

using namespace bratteli;

namespace {

BratteliDiagram example() {
  return BratteliDiagram({{3, 5}, {11, 10}, {21, 21}},
                         {MultiplicityMatrix{{1, 1}, {0, 2}}, MultiplicityMatrix{{1, 1}, {1, 1}}});
}

std::vector<std::vector<long>> sizes_of(const BratteliDiagram& d) {
  std::vector<std::vector<long>> out;
  for (const auto& l : d.levels()) {
    std::vector<long> row;
    for (const auto& s : l.sizes) row.push_back(s.get_si());
    out.push_back(row);
  }
  return out;
}

using Sizes = std::vector<std::vector<long>>;

}  // namespace

TEST(Prepend, Example) {
  auto p = prepend_unit_level(example());
  EXPECT_EQ(sizes_of(p), (Sizes{{1}, {3, 5}, {11, 10}, {21, 21}}));
  EXPECT_EQ(p.map(0), (MultiplicityMatrix{{3}, {5}}));
  EXPECT_EQ(p.map(1), example().map(0));
}

TEST(Prepend, IdempotentOnUnitStart) {
  BratteliDiagram d({{1}, {2}}, {MultiplicityMatrix{{1}}});
  EXPECT_EQ(prepend_unit_level(d), d);
}

TEST(Prepend, SingleLevel) {
  auto p = prepend_unit_level(BratteliDiagram({{2}}, {}));
  EXPECT_EQ(sizes_of(p), (Sizes{{1}, {2}}));
  EXPECT_EQ(p.map(0), (MultiplicityMatrix{{2}}));
}

TEST(InsertSlackLevel, TwoSteps) {
  auto p = prepend_unit_level(example());
  auto once = insert_slack_level(p, 2);
  EXPECT_EQ(sizes_of(once), (Sizes{{1}, {3, 5}, {10, 10}, {11, 10}, {21, 21}}));
  EXPECT_EQ(once.map(1), (MultiplicityMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(once.map(2), MultiplicityMatrix::identity(2));
  auto twice = insert_slack_level(once, 2);
  EXPECT_EQ(sizes_of(twice), (Sizes{{1}, {3, 5}, {9, 10}, {10, 10}, {11, 10}, {21, 21}}));
}

TEST(InsertSlackLevel, ShrinksByOne) {
  BratteliDiagram d({{1}, {6}}, {MultiplicityMatrix{{1}}});
  auto e = insert_slack_level(d, 1);
  auto sigma = slack(e);
  EXPECT_EQ(sigma[1][0], BigInt(4));
  EXPECT_EQ(sigma[2][0], BigInt(1));
}

TEST(InsertSlackLevel, NoExcessSlack) {
  BratteliDiagram d({{1}, {2}}, {MultiplicityMatrix{{1}}});
  try {
    insert_slack_level(d, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoExcessSlack);
  }
  EXPECT_THROW(insert_slack_level(d, 0), Error);
}

TEST(Normalize, DrinenGolden) {
  auto trace = normalize_traced(example(), Strategy::drinen);
  const auto& n = trace.diagram;
  EXPECT_EQ(sizes_of(n), (Sizes{{1}, {3, 5}, {9, 10}, {10, 10}, {11, 10}, {21, 21}}));
  ASSERT_EQ(n.maps().size(), 5u);
  EXPECT_EQ(n.map(0), (MultiplicityMatrix{{3}, {5}}));
  EXPECT_EQ(n.map(1), (MultiplicityMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(n.map(2), MultiplicityMatrix::identity(2));
  EXPECT_EQ(n.map(3), MultiplicityMatrix::identity(2));
  EXPECT_EQ(n.map(4), (MultiplicityMatrix{{1, 1}, {1, 1}}));
  EXPECT_EQ(trace.insertions, 2u);
  EXPECT_EQ(trace.original_levels, (std::vector<std::size_t>{1, 4, 5}));
  EXPECT_EQ(excess_slack(n), BigInt(0));
}

TEST(Normalize, DrinenIdempotent) {
  auto once = normalize(example(), Strategy::drinen);
  EXPECT_EQ(normalize(once, Strategy::drinen), once);
  EXPECT_TRUE(is_normalized(once, Strategy::drinen));
  EXPECT_FALSE(is_normalized(example(), Strategy::drinen));
}

TEST(Normalize, DrinenPointSet) {
  auto n = normalize(example(), Strategy::drinen);
  EXPECT_EQ(compute_point_set(n, Strategy::drinen), (PointSet{{0, 0}, {2, 0}, {3, 0}, {4, 0}}));
  EXPECT_TRUE(verify_numpaths(n, compute_point_set(n, Strategy::drinen)).ok);
}

TEST(Normalize, NotNormalized) {
  try {
    compute_point_set(example(), Strategy::drinen);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
}

TEST(Normalize, M3LinePointSet) {
  BratteliDiagram d({{1}, {2}, {3}, {3}, {3}},
                    {MultiplicityMatrix{{1}}, MultiplicityMatrix{{1}}, MultiplicityMatrix{{1}}, MultiplicityMatrix{{1}}});
  EXPECT_EQ(compute_point_set(d, Strategy::drinen), (PointSet{{0, 0}, {1, 0}, {2, 0}}));
}

TEST(Normalize, KumjianExample) {
  auto trace = normalize_traced(example(), Strategy::kumjian);
  const auto& k = trace.diagram;
  // new level 0 holds sources for the first-level slack; level 1 gains one
  // source for the slack-3 vertex above it
  EXPECT_EQ(sizes_of(k), (Sizes{{1, 1}, {3, 5, 1}, {11, 10}, {21, 21}}));
  EXPECT_EQ(k.map(0), (MultiplicityMatrix{{3, 0}, {0, 5}, {0, 0}}));
  EXPECT_EQ(k.map(1), (MultiplicityMatrix{{1, 1, 3}, {0, 2, 0}}));
  EXPECT_EQ(k.map(2), example().map(1));
  const auto s = compute_point_set(k, Strategy::kumjian);
  EXPECT_EQ(s, trace.added);
  EXPECT_EQ(s, (PointSet{{0, 0}, {0, 1}, {1, 2}}));
  EXPECT_TRUE(verify_numpaths(k, s).ok);
  EXPECT_TRUE(is_normalized(k, Strategy::kumjian));
  EXPECT_EQ(normalize(k, Strategy::kumjian), k);
}

TEST(Normalize, TailSurvives) {
  BratteliDiagram d({{1}, {2}}, {MultiplicityMatrix{{1}}}, MultiplicityMatrix{{1}});
  auto n = normalize(d, Strategy::drinen);
  EXPECT_TRUE(n.has_tail());
  EXPECT_TRUE(validate(n).ok());
}

TEST(Strategy, Parse) {
  EXPECT_EQ(parse_strategy("kumjian"), Strategy::kumjian);
  EXPECT_EQ(to_string(Strategy::drinen), "drinen");
  EXPECT_THROW(parse_strategy("other"), Error);
}
