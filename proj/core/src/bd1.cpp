#include "bratteli/bd1.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace bratteli {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string keyword;
  std::size_t keyword_column = 0;
  std::vector<Token> tokens;
};

[[noreturn]] void syntax(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, "", 0, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) && raw[j] != ';') ++j;
      if (j == i) j = i + 1;  // lone ';'
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    const bool blank = line.tokens.empty();
    if (!blank) {
      Token head = line.tokens.front();
      line.tokens.erase(line.tokens.begin());
      line.keyword_column = head.column;
      if (const auto colon = head.text.find(':'); colon != std::string::npos) {
        line.keyword = head.text.substr(0, colon);
        if (colon + 1 < head.text.size()) {
          line.tokens.insert(line.tokens.begin(), {head.text.substr(colon + 1), head.column + colon + 1});
        }
      } else {
        line.keyword = head.text;
      }
    }
    if (!blank) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

BigInt parse_natural(const Line& line, const Token& t) {
  if (t.text.empty() ||
      !std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    syntax(line.number, t.column, "expected a nonnegative integer, found '" + t.text + "'");
  }
  return BigInt(t.text);
}

std::vector<BigInt> parse_sizes(const Line& line) {
  if (line.tokens.empty()) syntax(line.number, line.keyword_column, "sizes: needs at least one size");
  std::vector<BigInt> sizes;
  for (const auto& t : line.tokens) sizes.push_back(parse_natural(line, t));
  return sizes;
}

std::vector<std::vector<BigInt>> parse_rows(const Line& line) {
  std::vector<std::vector<BigInt>> rows(1);
  std::size_t last_column = line.keyword_column;
  for (const auto& t : line.tokens) {
    last_column = t.column;
    if (t.text == ";") {
      if (rows.back().empty()) syntax(line.number, t.column, "empty matrix row before ';'");
      rows.emplace_back();
      continue;
    }
    rows.back().push_back(parse_natural(line, t));
  }
  if (rows.back().empty()) syntax(line.number, last_column, "expected a matrix row");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) {
      syntax(line.number, line.keyword_column,
             "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                 " entries, row 1 has " + std::to_string(rows[0].size()));
    }
  }
  return rows;
}

std::size_t parse_index(const Line& line, const Token& t, std::string_view part) {
  const BigInt v = parse_natural(line, {std::string(part), t.column});
  auto n = to_size(v);
  if (!n || *n == 0) syntax(line.number, t.column, "indices in point: are 1-based");
  return *n - 1;
}

}  // namespace

Bd1Document parse_bd1(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) syntax(1, 1, "expected header 'bd1'");
  if (lines[0].keyword != "bd1" || !lines[0].tokens.empty()) {
    syntax(lines[0].number, lines[0].keyword_column, "expected header 'bd1', found '" + lines[0].keyword + "'");
  }

  std::vector<LevelSpec> levels;
  std::vector<MultiplicityMatrix> maps;
  std::optional<MultiplicityMatrix> tail;
  std::optional<PointSet> points;
  const Line* pending_k = nullptr;
  std::size_t pending_rows = 0;
  const Line* last_sizes = nullptr;

  enum class State { sizes, after_sizes, after_tail, done };
  State state = State::sizes;

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& kw = line.keyword;
    if (kw == "sizes") {
      if (state != State::sizes) {
        syntax(line.number, line.keyword_column,
               state == State::after_sizes ? "expected 'k:' between two 'sizes:' lines"
                                           : "'sizes:' after 'tail:' or 'point:'");
      }
      auto sizes = parse_sizes(line);
      if (pending_k) {
        if (pending_rows != sizes.size()) {
          syntax(pending_k->number, pending_k->keyword_column,
                 "k: on line " + std::to_string(pending_k->number) + " has " + std::to_string(pending_rows) +
                     " rows but sizes: on line " + std::to_string(line.number) + " lists " +
                     std::to_string(sizes.size()) + " vertices");
        }
        pending_k = nullptr;
      }
      levels.emplace_back(std::move(sizes));
      last_sizes = &line;
      state = State::after_sizes;
    } else if (kw == "k") {
      if (state != State::after_sizes) syntax(line.number, line.keyword_column, "'k:' must follow a 'sizes:' line");
      auto rows = parse_rows(line);
      if (rows[0].size() != levels.back().width()) {
        syntax(line.number, line.keyword_column,
               "k: on line " + std::to_string(line.number) + " has " + std::to_string(rows[0].size()) +
                   " columns but sizes: on line " + std::to_string(last_sizes->number) + " lists " +
                   std::to_string(levels.back().width()) + " vertices");
      }
      pending_k = &line;
      pending_rows = rows.size();
      maps.emplace_back(std::move(rows));
      state = State::sizes;
    } else if (kw == "tail") {
      if (state != State::after_sizes) syntax(line.number, line.keyword_column, "'tail:' must follow the last 'sizes:' line");
      auto rows = parse_rows(line);
      if (rows.size() != rows[0].size() || rows.size() != levels.back().width()) {
        syntax(line.number, line.keyword_column,
               "tail: must be square of order " + std::to_string(levels.back().width()) + " (sizes: on line " +
                   std::to_string(last_sizes->number) + ")");
      }
      tail.emplace(std::move(rows));
      state = State::after_tail;
    } else if (kw == "point") {
      if (state != State::after_sizes && state != State::after_tail) {
        syntax(line.number, line.keyword_column,
               state == State::done ? "duplicate 'point:' line" : "'point:' must follow the last 'sizes:' line");
      }
      PointSet s;
      for (const auto& t : line.tokens) {
        const auto colon = t.text.find(':');
        if (colon == std::string::npos) syntax(line.number, t.column, "expected level:vertex, found '" + t.text + "'");
        const std::size_t n = parse_index(line, t, std::string_view(t.text).substr(0, colon));
        const std::size_t i = parse_index(line, t, std::string_view(t.text).substr(colon + 1));
        if (n >= levels.size() || i >= levels[n].width()) {
          throw Error(ErrorCode::SemanticError, "line " + std::to_string(line.number) + ", column " +
                                                    std::to_string(t.column) + ": no vertex " + t.text);
        }
        s.insert({n, i});
      }
      points = std::move(s);
      state = State::done;
    } else {
      syntax(line.number, line.keyword_column,
             "expected 'sizes:', 'k:', 'tail:' or 'point:', found '" + kw + "'");
    }
  }
  if (levels.empty()) syntax(lines.back().number, 1, "expected at least one 'sizes:' line");
  if (pending_k) {
    syntax(pending_k->number, pending_k->keyword_column,
           "k: on line " + std::to_string(pending_k->number) + " is not followed by a 'sizes:' line");
  }

  Bd1Document doc{BratteliDiagram(std::move(levels), std::move(maps), std::move(tail)), std::move(points)};
  if (auto v = validate(doc.diagram); !v) {
    throw Error(ErrorCode::SemanticError, std::string(to_string(*v.error)) + ": " + v.message);
  }
  return doc;
}

namespace {

void write_matrix(std::ostringstream& out, const MultiplicityMatrix& k) {
  for (std::size_t i = 0; i < k.rows(); ++i) {
    if (i) out << " ;";
    for (std::size_t j = 0; j < k.cols(); ++j) out << ' ' << k(i, j).get_str();
  }
}

}  // namespace

std::string serialize_bd1(const BratteliDiagram& d, const std::optional<PointSet>& points) {
  std::ostringstream out;
  out << "bd1\n";
  for (std::size_t n = 0; n < d.depth(); ++n) {
    if (n > 0) {
      out << "k:";
      write_matrix(out, d.map(n - 1));
      out << '\n';
    }
    out << "sizes:";
    for (const auto& s : d.level(n).sizes) out << ' ' << s.get_str();
    out << '\n';
  }
  if (d.tail()) {
    out << "tail:";
    write_matrix(out, *d.tail());
    out << '\n';
  }
  if (points) {
    out << "point:";
    for (const auto& v : *points) out << ' ' << v.level + 1 << ':' << v.index + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace bratteli
