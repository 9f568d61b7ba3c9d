#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bratteli/bd1.hpp"
#include "bratteli/dot.hpp"
#include "bratteli/normalization.hpp"
#include "bratteli/report.hpp"
#include "cli.hpp"

using namespace bratteli;

namespace {

std::string data(const std::string& name) { return std::string(BRATTELI_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode parse_error(std::string_view text, std::string* message = nullptr) {
  try {
    parse_bd1(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST(Bd1, ParseExample) {
  auto doc = parse_bd1(slurp(data("example.bd1")));
  EXPECT_EQ(doc.diagram.depth(), 3u);
  EXPECT_EQ(doc.diagram.map(0), (MultiplicityMatrix{{1, 1}, {0, 2}}));
  EXPECT_FALSE(doc.points.has_value());
}

TEST(Bd1, ParsePointAndTail) {
  auto doc = parse_bd1(slurp(data("m3_line.bd1")));
  ASSERT_TRUE(doc.points.has_value());
  EXPECT_EQ(*doc.points, (PointSet{{0, 0}, {1, 0}, {2, 0}}));
  ASSERT_TRUE(doc.diagram.has_tail());
  EXPECT_EQ(*doc.diagram.tail(), (MultiplicityMatrix{{1}}));
}

TEST(Bd1, CompactSpellings) {
  auto doc = parse_bd1("bd1\nsizes:3 5   # trailing\n\nk:1 1;0 2\r\nsizes: 11 10\n");
  EXPECT_EQ(doc.diagram.map(0), (MultiplicityMatrix{{1, 1}, {0, 2}}));
}

TEST(Bd1, RowMismatchNamesBothLines) {
  std::string message;
  EXPECT_EQ(parse_error(slurp(data("bad_k_rows.bd1")), &message), ErrorCode::SyntaxError);
  EXPECT_NE(message.find("line 3"), std::string::npos) << message;
  EXPECT_NE(message.find("line 4"), std::string::npos) << message;
}

TEST(Bd1, SyntaxErrorsCarryLocation) {
  std::string message;
  EXPECT_EQ(parse_error("bd1\nsizes: 3 x\n", &message), ErrorCode::SyntaxError);
  EXPECT_NE(message.find("line 2, column 10"), std::string::npos) << message;
  EXPECT_EQ(parse_error("bd2\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(""), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\nsizes: 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\nk: 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1 1\nk: 1\nsizes: 2\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\nk: 1 ; 1 1\nsizes: 1 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\ntail: 1 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: -1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\npoint: 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\npoint: 0:1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\nedges: 1\n"), ErrorCode::SyntaxError);
}

TEST(Bd1, SemanticErrors) {
  std::string message;
  EXPECT_EQ(parse_error(slurp(data("negative_slack.bd1")), &message), ErrorCode::SemanticError);
  EXPECT_NE(message.find("v2.1"), std::string::npos) << message;
  EXPECT_EQ(parse_error("bd1\nsizes: 0\n"), ErrorCode::SemanticError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1 1\nk: 1 0\nsizes: 2\n"), ErrorCode::SemanticError);
  EXPECT_EQ(parse_error("bd1\nsizes: 1\npoint: 2:1\n"), ErrorCode::SemanticError);
}

TEST(Bd1, RoundTripCorpus) {
  for (const auto& entry : std::filesystem::directory_iterator(BRATTELI_TEST_DATA)) {
    const std::string name = entry.path().filename().string();
    if (name == "bad_k_rows.bd1" || name == "negative_slack.bd1") continue;
    auto doc = parse_bd1(slurp(entry.path().string()));
    const std::string text = serialize_bd1(doc.diagram, doc.points);
    auto again = parse_bd1(text);
    EXPECT_EQ(again.diagram, doc.diagram) << name;
    EXPECT_EQ(again.points, doc.points) << name;
    EXPECT_EQ(serialize_bd1(again.diagram, again.points), text) << name;
  }
}

TEST(Bd1, CanonicalText) {
  BratteliDiagram d({{1}, {2}}, {MultiplicityMatrix{{2}}}, MultiplicityMatrix{{1}});
  EXPECT_EQ(serialize_bd1(d, PointSet{{0, 0}}), "bd1\nsizes: 1\nk: 2\nsizes: 2\ntail: 1\npoint: 1:1\n");
}

TEST(Dot, PointedLine) {
  auto doc = parse_bd1(slurp(data("m3_line.bd1")));
  auto d = extend(doc.diagram, 2);
  const std::string dot = to_dot(d, *doc.points);
  std::size_t ranks = 0, doubles = 0;
  for (std::size_t p = dot.find("rank=same"); p != std::string::npos; p = dot.find("rank=same", p + 1)) ++ranks;
  for (std::size_t p = dot.find("doublecircle"); p != std::string::npos; p = dot.find("doublecircle", p + 1)) ++doubles;
  EXPECT_EQ(ranks, 5u);
  EXPECT_EQ(doubles, 3u);
  EXPECT_NE(dot.find("\"v1.1\" [label=\"v1.1 [1]\", shape=doublecircle]"), std::string::npos) << dot;
}

TEST(Dot, SingleVertexAndMultiplicity) {
  const std::string single = to_dot(BratteliDiagram({{1}}, {}));
  EXPECT_EQ(single.find("->"), std::string::npos);
  auto doc = parse_bd1(slurp(data("example.bd1")));
  const std::string dot = to_dot(doc.diagram);
  EXPECT_NE(dot.find("\"v1.2\" -> \"v2.2\" [label=\"2\"];"), std::string::npos) << dot;
  EXPECT_EQ(to_dot(doc.diagram), dot);
}

TEST(Report, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Report, PointResolution) {
  auto from_file = prepare_analysis(parse_bd1(slurp(data("m3_line.bd1"))), {});
  EXPECT_EQ(from_file.source, PointSource::file);
  EXPECT_EQ(from_file.diagram.depth(), 6u);
  auto computed = prepare_analysis(parse_bd1(slurp(data("doubling.bd1"))), {});
  EXPECT_EQ(computed.source, PointSource::computed);
  auto normalized = prepare_analysis(parse_bd1(slurp(data("example.bd1"))), {});
  EXPECT_EQ(normalized.source, PointSource::normalized);
  EXPECT_EQ(normalized.diagram.depth(), 6u);
  AnalysisOptions three;
  three.levels = 3;
  EXPECT_EQ(prepare_analysis(parse_bd1(slurp(data("example.bd1"))), three).diagram.depth(), 3u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"validate", data("example.bd1")}).code, 0);
  EXPECT_EQ(run({"validate", data("negative_slack.bd1")}).code, 1);
  EXPECT_EQ(run({"validate", data("bad_k_rows.bd1")}).code, 2);
  EXPECT_EQ(run({"validate", data("no_such_file.bd1")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"render", data("example.bd1")}).code, 2);
  EXPECT_EQ(run({"normalize", data("example.bd1"), "--strategy", "other"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CountsMisPointed) {
  auto r = run({"counts", data("m3_mispointed.bd1")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos) << r.out;
  EXPECT_EQ(run({"counts", data("m3_line.bd1")}).code, 0);
}

TEST(Cli, NormalizeOutputParses) {
  auto r = run({"normalize", data("example.bd1")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(data("example_normalized.bd1")));

  auto k = run({"normalize", data("example.bd1"), "--strategy", "kumjian"});
  ASSERT_EQ(k.code, 0) << k.err;
  auto kd = parse_bd1(k.out);
  EXPECT_EQ(kd.points, compute_point_set(kd.diagram, Strategy::kumjian));

  const auto out_path = std::filesystem::temp_directory_path() / "bratteli_normalize_test.bd1";
  EXPECT_EQ(run({"normalize", data("example.bd1"), "-o", out_path.string()}).code, 0);
  EXPECT_EQ(slurp(out_path.string()), r.out);
  std::filesystem::remove(out_path);
}

TEST(Cli, PointAlgebraDiagonal) {
  auto p = run({"point", data("example.bd1")});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("S = {v1.1, v3.1, v4.1, v5.1}"), std::string::npos) << p.out;
  EXPECT_EQ(run({"algebra", data("example_normalized.bd1")}).code, 0);
  EXPECT_EQ(run({"algebra", data("m3_mispointed.bd1")}).code, 1);
  EXPECT_EQ(run({"diagonal", data("example_normalized.bd1"), "--levels", "4"}).code, 0);
  EXPECT_EQ(run({"render", data("m3_line.bd1"), "--dot"}).code, 0);
}

TEST(Cli, ReportDeterministic) {
  auto a = run({"report", data("example_normalized.bd1"), "--json"});
  auto b = run({"report", data("example_normalized.bd1"), "--json"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"numpaths_ok\": true"), std::string::npos);
  EXPECT_NE(a.out.find("\"masa_ok\": true"), std::string::npos);
  EXPECT_EQ(run({"report", data("m3_mispointed.bd1"), "--json"}).code, 1);
  EXPECT_EQ(run({"report", data("example.bd1"), "--json", "--cap", "2"}).code, 2);
}
