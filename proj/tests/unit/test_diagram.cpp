#include <gtest/gtest.h>

#include "bratteli/diagram.hpp"

using namespace bratteli;

namespace {

BratteliDiagram example() {
  return BratteliDiagram({{3, 5}, {11, 10}, {21, 21}},
                         {MultiplicityMatrix{{1, 1}, {0, 2}}, MultiplicityMatrix{{1, 1}, {1, 1}}});
}

SlackProfile profile(std::initializer_list<std::initializer_list<long>> rows) {
  SlackProfile out;
  for (auto r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST(Validate, ExampleIsValid) { EXPECT_TRUE(validate(example()).ok()); }

TEST(Validate, SingleLevel) { EXPECT_TRUE(validate(BratteliDiagram({{1}}, {})).ok()); }

TEST(Validate, NegativeSlackLocated) {
  BratteliDiagram d({{3, 5}, {7, 10}}, {MultiplicityMatrix{{1, 1}, {0, 2}}});
  auto r = validate(d);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.error, ErrorCode::NegativeSlack);
  EXPECT_EQ(r.location, (VertexRef{1, 0}));
}

TEST(Validate, ZeroColumn) {
  BratteliDiagram d({{1, 1}, {2}}, {MultiplicityMatrix{{1, 0}}});
  auto r = validate(d);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.error, ErrorCode::ZeroColumn);
  EXPECT_EQ(r.location, (VertexRef{0, 1}));
}

TEST(Validate, DimensionMismatch) {
  BratteliDiagram d({{1}, {2, 2}}, {MultiplicityMatrix{{1}}});
  EXPECT_EQ(*validate(d).error, ErrorCode::DimensionMismatch);
  BratteliDiagram missing({{1}, {2}}, {});
  EXPECT_EQ(*validate(missing).error, ErrorCode::DimensionMismatch);
}

TEST(Validate, EmptyAndNonPositive) {
  EXPECT_EQ(*validate(BratteliDiagram()).error, ErrorCode::EmptyLevel);
  EXPECT_EQ(*validate(BratteliDiagram({LevelSpec{}}, {})).error, ErrorCode::EmptyLevel);
  EXPECT_EQ(*validate(BratteliDiagram({{0}}, {})).error, ErrorCode::NonPositiveSize);
}

TEST(Validate, TailShape) {
  BratteliDiagram d({{1, 1}}, {}, MultiplicityMatrix{{1}});
  EXPECT_EQ(*validate(d).error, ErrorCode::DimensionMismatch);
}

TEST(Validate, RequireValidThrowsCode) {
  BratteliDiagram d({{3, 5}, {7, 10}}, {MultiplicityMatrix{{1, 1}, {0, 2}}});
  try {
    require_valid(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeSlack);
  }
}

TEST(Slack, Example) { EXPECT_EQ(slack(example()), profile({{3, 5}, {3, 0}, {0, 0}})); }

TEST(Slack, UnitFirstLevel) {
  BratteliDiagram d({{1}, {4}}, {MultiplicityMatrix{{2}}});
  EXPECT_EQ(slack(d), profile({{1}, {2}}));
}

TEST(Telescope, Example) {
  EXPECT_EQ(telescope(example(), 0, 2), (MultiplicityMatrix{{1, 3}, {1, 3}}));
  EXPECT_EQ(telescope(example(), 0, 1), example().map(0));
  EXPECT_EQ(telescope(example(), 1, 1), MultiplicityMatrix::identity(2));
}

TEST(Telescope, OutOfRange) {
  EXPECT_THROW(telescope(example(), 2, 1), Error);
  EXPECT_THROW(telescope(example(), 0, 3), Error);
}

TEST(Extend, LineWithUnitTail) {
  BratteliDiagram d({{1}, {2}, {3}}, {MultiplicityMatrix{{1}}, MultiplicityMatrix{{1}}}, MultiplicityMatrix{{1}});
  auto e = extend(d, 2);
  ASSERT_EQ(e.depth(), 5u);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(e.size({n, 0}), BigInt(std::min<long>(n + 1, 3)));
  EXPECT_TRUE(validate(e).ok());
  EXPECT_EQ(extend(d, 0), d);
}

TEST(Extend, Doubling) {
  BratteliDiagram d({{1}}, {}, MultiplicityMatrix{{2}});
  auto e = extend(d, 3);
  std::vector<BigInt> sizes;
  for (const auto& l : e.levels()) sizes.push_back(l.sizes[0]);
  EXPECT_EQ(sizes, (std::vector<BigInt>{1, 2, 4, 8}));
}

TEST(Extend, NoTail) {
  try {
    extend(example(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoTail);
  }
}

TEST(Diagram, EdgesAndDegrees) {
  auto d = example();
  EXPECT_EQ(d.in_degree({1, 1}), BigInt(2));
  EXPECT_EQ(d.edges_into(1), BigInt(4));
  EXPECT_EQ(d.edges_into(2), BigInt(4));
}

TEST(Diagram, Truncate) {
  auto t = truncate(example(), 2);
  EXPECT_EQ(t.depth(), 2u);
  EXPECT_EQ(t.maps().size(), 1u);
  EXPECT_TRUE(validate(t).ok());
}

TEST(Labels, OneBased) { EXPECT_EQ((VertexRef{2, 0}.label()), "v3.1"); }
