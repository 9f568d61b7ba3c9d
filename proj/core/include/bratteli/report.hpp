#ifndef BRATTELI_REPORT_HPP
#define BRATTELI_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "bratteli/bd1.hpp"
#include "bratteli/path_space.hpp"

namespace bratteli {

std::string_view tool_version();
std::string sha256_hex(std::string_view data);

struct AnalysisOptions {
  std::optional<std::size_t> levels;  // keep the first N levels
  std::size_t cap = kDefaultEnumerationCap;
};

enum class PointSource { file, computed, normalized };
std::string_view to_string(PointSource p);

struct Analysis {
  BratteliDiagram diagram;
  PointSet points;
  PointSource source = PointSource::file;
};

/// The diagram and point set analysis commands work on: the explicit levels
/// plus 3 tail unrollings, pointed by the file's point: line if present,
/// else by the drinen point set (normalizing first when needed), then cut to
/// `levels`.
Analysis prepare_analysis(const Bd1Document& doc, const AnalysisOptions& opt);

struct Report {
  std::string json;
  bool ok = false;
};

/// Full verification report as deterministic JSON (schema "bratteli-report/1").
Report build_report(std::string_view input_text, const Bd1Document& doc, const AnalysisOptions& opt);

}  // namespace bratteli

#endif  // BRATTELI_REPORT_HPP
