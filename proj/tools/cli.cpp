#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bratteli/bd1.hpp"
#include "bratteli/cylinder_algebra.hpp"
#include "bratteli/diagonal.hpp"
#include "bratteli/dot.hpp"
#include "bratteli/normalization.hpp"
#include "bratteli/report.hpp"

namespace bratteli::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Input {
  std::string text;
  Bd1Document doc;
};

Input load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Input input{buf.str(), {}};
  input.doc = parse_bd1(input.text);
  return input;
}

std::string point_list(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    out += (first ? "" : ", ") + v.label();
    first = false;
  }
  return out + "}";
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out.empty() ? "-" : out;
}

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

int cmd_validate(const std::string& path, std::ostream& out) {
  Input in;
  try {
    in = load(path);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SemanticError) throw;
    out << "invalid: " << e.what() << "\n";
    return kFailed;
  }
  const auto& d = in.doc.diagram;
  out << "valid: " << d.depth() << " levels";
  if (d.has_tail()) out << " + tail";
  if (in.doc.points) out << ", " << in.doc.points->size() << " pointed vertices";
  out << "\n";
  return kOk;
}

int cmd_normalize(const std::string& path, const std::string& strategy_name, const std::string& output,
                  std::ostream& out) {
  const Strategy strategy = parse_strategy(strategy_name);
  const Input in = load(path);
  const auto trace = normalize_traced(in.doc.diagram, strategy);
  const std::string text = serialize_bd1(trace.diagram, compute_point_set(trace.diagram, strategy));
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw Error(ErrorCode::SyntaxError, "cannot write " + output);
    file << text;
  }
  return kOk;
}

int cmd_point(const std::string& path, const AnalysisOptions& opt, std::ostream& out) {
  const Input in = load(path);
  const Analysis a = prepare_analysis(in.doc, opt);
  out << "source: " << to_string(a.source) << "\n";
  out << "S = " << point_list(a.points) << "\n";
  return kOk;
}

int cmd_counts(const std::string& path, const AnalysisOptions& opt, std::ostream& out) {
  const Input in = load(path);
  const Analysis a = prepare_analysis(in.doc, opt);
  const auto counts = count_paths(a.diagram, a.points);
  std::size_t mismatches = 0;
  out << std::left << std::setw(10) << "vertex" << std::setw(14) << "size" << std::setw(14) << "paths" << "\n";
  for (std::size_t n = 0; n < a.diagram.depth(); ++n) {
    for (std::size_t i = 0; i < a.diagram.width(n); ++i) {
      const VertexRef v{n, i};
      const bool match = counts[n][i] == a.diagram.size(v);
      if (!match) ++mismatches;
      out << std::setw(10) << v.label() << std::setw(14) << a.diagram.size(v).get_str() << std::setw(14)
          << counts[n][i].get_str() << (match ? "" : "MISMATCH") << "\n";
    }
  }
  if (mismatches == 0) {
    out << "numpaths: ok\n";
    return kOk;
  }
  out << "numpaths: FAIL (" << mismatches << " mismatched vertices)\n";
  return kFailed;
}

int cmd_algebra(const std::string& path, const AnalysisOptions& opt, std::ostream& out) {
  const Input in = load(path);
  const Analysis a = prepare_analysis(in.doc, opt);
  const TowerReport tower = verify_tower(a.diagram, a.points, a.diagram.depth(), opt.cap);
  out << std::left << std::setw(7) << "level" << std::setw(16) << "blocks" << std::setw(10) << "dim"
      << std::setw(10) << "expected" << std::setw(7) << "units" << std::setw(7) << "mult"
      << "intertwiner\n";
  for (const auto& t : tower.levels) {
    out << std::setw(7) << t.level + 1 << std::setw(16) << join(t.block_sizes) << std::setw(10) << t.dimension
        << std::setw(10) << t.expected_dimension.get_str() << std::setw(7) << mark(t.matrix_units_ok)
        << std::setw(7) << (t.multiplicities ? mark(t.multiplicities_ok) : "-")
        << (t.multiplicities ? mark(t.intertwiner_ok) : "-") << "\n";
    if (!t.ok()) out << "  " << t.detail << "\n";
  }
  out << "tower: " << mark(tower.summary.ok) << "\n";
  return tower.summary.ok ? kOk : kFailed;
}

int cmd_diagonal(const std::string& path, const AnalysisOptions& opt, std::ostream& out) {
  const Input in = load(path);
  const Analysis a = prepare_analysis(in.doc, opt);
  const auto& d = a.diagram;
  bool ok = true;
  out << std::left << std::setw(7) << "level" << std::setw(8) << "dim D" << std::setw(10) << "in-edges"
      << std::setw(9) << "pointed" << std::setw(11) << "commutant" << std::setw(6) << "masa"
      << "C-recursion\n";
  for (std::size_t n = 0; n + 1 < d.depth(); ++n) {
    const MasaResult m = verify_masa(d, a.points, n, opt.cap);
    const VerificationItem c = verify_C_recursion(d, a.points, n, opt.cap);
    out << std::setw(7) << n + 2 << std::setw(8) << m.diagonal_dim << std::setw(10) << m.in_edges
        << std::setw(9) << m.pointed << std::setw(11) << m.relative_commutant_dim << std::setw(6)
        << mark(m.item.ok) << mark(c.ok) << "\n";
    if (!m.item.ok) out << "  " << m.item.detail << "\n";
    if (!c.ok) out << "  " << c.detail << "\n";
    ok = ok && m.item.ok && c.ok;
  }
  out << "\n" << std::setw(7) << "level" << std::setw(13) << "expectation" << "ker P\n";
  for (std::size_t n = 0; n < d.depth(); ++n) {
    const ExpectationResult e = verify_expectation(d, a.points, n, 200, 0x5eed, opt.cap);
    const KernelResult k = kernel_free_normalizers(d, a.points, n, opt.cap);
    out << std::setw(7) << n + 1 << std::setw(13) << mark(e.item.ok) << mark(k.item.ok) << " (dim "
        << k.kernel_dim << ")\n";
    if (!e.item.ok) out << "  " << e.item.detail << "\n";
    if (!k.item.ok) out << "  " << k.item.detail << "\n";
    ok = ok && e.item.ok && k.item.ok;
  }
  out << "diagonal: " << mark(ok) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_render(const std::string& path, std::ostream& out) {
  const Input in = load(path);
  PointSet s;
  if (in.doc.points) {
    s = *in.doc.points;
  } else if (is_normalized(in.doc.diagram, Strategy::drinen)) {
    s = compute_point_set(in.doc.diagram, Strategy::drinen);
  }
  out << to_dot(in.doc.diagram, s);
  return kOk;
}

int cmd_report(const std::string& path, const AnalysisOptions& opt, std::ostream& out) {
  const Input in = load(path);
  const Report r = build_report(in.text, in.doc, opt);
  out << r.json;
  return r.ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for pointed Bratteli diagrams", "bratteli"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string file;
  std::string strategy = "drinen";
  std::string output;
  std::size_t levels = 0;
  std::size_t cap = kDefaultEnumerationCap;
  bool dot = false;
  bool as_json = false;

  auto add_levels = [&](CLI::App* sub) {
    sub->add_option("--levels", levels, "Analyse only the first N levels")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check the structural invariants of a diagram");
  validate->add_option("file", file, "bd1 file")->required();

  auto* normalize = app.add_subcommand("normalize", "Normalize and print the pointed result as bd1");
  normalize->add_option("file", file, "bd1 file")->required();
  normalize->add_option("--strategy", strategy, "drinen or kumjian")
      ->check(CLI::IsMember({"drinen", "kumjian"}));
  normalize->add_option("-o,--output", output, "Write to this file instead of stdout");

  auto* point = app.add_subcommand("point", "Print the point set used for analysis");
  point->add_option("file", file, "bd1 file")->required();

  auto* counts = app.add_subcommand("counts", "Compare path counts with vertex sizes");
  counts->add_option("file", file, "bd1 file")->required();
  add_levels(counts);

  auto* algebra = app.add_subcommand("algebra", "Verify the matrix-unit tower and its embeddings");
  algebra->add_option("file", file, "bd1 file")->required();
  add_levels(algebra);
  algebra->add_option("--cap", cap, "Path enumeration cap");

  auto* diagonal = app.add_subcommand("diagonal", "Verify the diagonal tower, MASA property and expectation");
  diagonal->add_option("file", file, "bd1 file")->required();
  add_levels(diagonal);
  diagonal->add_option("--cap", cap, "Path enumeration cap");

  auto* render = app.add_subcommand("render", "Render the diagram");
  render->add_option("file", file, "bd1 file")->required();
  render->add_flag("--dot", dot, "Graphviz output")->required();

  auto* report = app.add_subcommand("report", "Full verification report");
  report->add_option("file", file, "bd1 file")->required();
  report->add_flag("--json", as_json, "JSON output")->required();
  add_levels(report);
  report->add_option("--cap", cap, "Path enumeration cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kUsage;
  }

  AnalysisOptions opt;
  if (levels > 0) opt.levels = levels;
  opt.cap = cap;

  try {
    if (*validate) return cmd_validate(file, out);
    if (*normalize) return cmd_normalize(file, strategy, output, out);
    if (*point) return cmd_point(file, opt, out);
    if (*counts) return cmd_counts(file, opt, out);
    if (*algebra) return cmd_algebra(file, opt, out);
    if (*diagonal) return cmd_diagonal(file, opt, out);
    if (*render) return cmd_render(file, out);
    if (*report) return cmd_report(file, opt, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bratteli::cli
