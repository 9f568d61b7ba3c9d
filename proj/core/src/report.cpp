#include "bratteli/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include <json.hpp>

#include "bratteli/cylinder_algebra.hpp"
#include "bratteli/diagonal.hpp"
#include "bratteli/normalization.hpp"

#ifndef BRATTELI_VERSION
#define BRATTELI_VERSION "0.0.0"
#endif

namespace bratteli {

using json = nlohmann::ordered_json;

std::string_view tool_version() { return BRATTELI_VERSION; }

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string_view to_string(PointSource p) {
  switch (p) {
    case PointSource::file: return "file";
    case PointSource::computed: return "computed";
    case PointSource::normalized: return "normalized";
  }
  return "?";
}

Analysis prepare_analysis(const Bd1Document& doc, const AnalysisOptions& opt) {
  Analysis a;
  a.diagram = analysis_truncation(doc.diagram);
  if (doc.points) {
    a.points = *doc.points;
    a.source = PointSource::file;
  } else if (is_normalized(a.diagram, Strategy::drinen)) {
    a.points = compute_point_set(a.diagram, Strategy::drinen);
    a.source = PointSource::computed;
  } else {
    a.diagram = normalize(a.diagram, Strategy::drinen);
    a.points = compute_point_set(a.diagram, Strategy::drinen);
    a.source = PointSource::normalized;
  }
  if (opt.levels && *opt.levels < a.diagram.depth()) {
    a.diagram = truncate(a.diagram, *opt.levels);
    PointSet kept;
    for (const auto& v : a.points) {
      if (v.level < *opt.levels) kept.insert(v);
    }
    a.points = std::move(kept);
  }
  return a;
}

namespace {

json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json matrix(const MultiplicityMatrix& k) {
  json rows = json::array();
  for (std::size_t i = 0; i < k.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < k.cols(); ++j) row.push_back(big(k(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json item_json(const VerificationItem& item) {
  json j;
  j["ok"] = item.ok;
  j["detail"] = item.detail;
  return j;
}

}  // namespace

Report build_report(std::string_view input_text, const Bd1Document& doc, const AnalysisOptions& opt) {
  const Analysis a = prepare_analysis(doc, opt);
  const BratteliDiagram& d = a.diagram;
  const PointSet& s = a.points;

  json r;
  r["schema"] = "bratteli-report/1";
  r["tool"] = {{"name", "bratteli"}, {"version", std::string(tool_version())}};
  r["input"] = {{"sha256", sha256_hex(input_text)}};
  r["options"] = {{"levels", opt.levels ? json(*opt.levels) : json(nullptr)}, {"cap", opt.cap}};

  json diagram;
  json levels = json::array();
  for (const auto& l : d.levels()) {
    json sizes = json::array();
    for (const auto& x : l.sizes) sizes.push_back(big(x));
    levels.push_back(std::move(sizes));
  }
  json maps = json::array();
  for (const auto& k : d.maps()) maps.push_back(matrix(k));
  diagram["levels"] = std::move(levels);
  diagram["maps"] = std::move(maps);
  diagram["input_levels"] = doc.diagram.depth();
  diagram["tail"] = doc.diagram.tail() ? matrix(*doc.diagram.tail()) : json(nullptr);
  r["diagram"] = std::move(diagram);

  json slack_json = json::array();
  for (const auto& level : slack(d)) {
    json row = json::array();
    for (const auto& x : level) row.push_back(big(x));
    slack_json.push_back(std::move(row));
  }
  r["slack"] = std::move(slack_json);

  json points = json::array();
  for (const auto& v : s) points.push_back(v.label());
  r["point_set"] = {{"source", std::string(to_string(a.source))}, {"vertices", std::move(points)}};

  bool ok = true;

  const auto counts = count_paths(d, s);
  bool numpaths_ok = true;
  json count_rows = json::array();
  for (std::size_t n = 0; n < d.depth(); ++n) {
    for (std::size_t i = 0; i < d.width(n); ++i) {
      const VertexRef v{n, i};
      const bool match = counts[n][i] == d.size(v);
      numpaths_ok = numpaths_ok && match;
      count_rows.push_back(
          {{"vertex", v.label()}, {"size", big(d.size(v))}, {"paths", big(counts[n][i])}, {"ok", match}});
    }
  }
  r["path_counts"] = std::move(count_rows);
  r["numpaths_ok"] = numpaths_ok;
  ok = ok && numpaths_ok;

  const TowerReport tower = verify_tower(d, s, d.depth(), opt.cap);
  json tower_rows = json::array();
  for (const auto& t : tower.levels) {
    json row;
    row["level"] = t.level + 1;
    row["block_sizes"] = t.block_sizes;
    row["dimension"] = t.dimension;
    row["expected_dimension"] = big(t.expected_dimension);
    row["dimension_ok"] = t.dimension_ok;
    row["matrix_units_ok"] = t.matrix_units_ok;
    row["multiplicities"] = t.multiplicities ? matrix(*t.multiplicities) : json(nullptr);
    row["multiplicities_ok"] = t.multiplicities_ok;
    row["intertwiner_ok"] = t.intertwiner_ok;
    row["detail"] = t.detail;
    tower_rows.push_back(std::move(row));
  }
  r["tower"] = std::move(tower_rows);
  r["tower_ok"] = tower.summary.ok;
  ok = ok && tower.summary.ok;

  bool masa_ok = true;
  json masa_rows = json::array();
  for (std::size_t n = 0; n + 1 < d.depth(); ++n) {
    const MasaResult m = verify_masa(d, s, n, opt.cap);
    const VerificationItem c = verify_C_recursion(d, s, n, opt.cap);
    json row;
    row["level"] = n + 2;
    row["diagonal_dim"] = m.diagonal_dim;
    row["in_edges"] = m.in_edges;
    row["pointed"] = m.pointed;
    row["relative_commutant_dim"] = m.relative_commutant_dim;
    row["centralizer_dim"] = m.centralizer_dim;
    row["masa"] = item_json(m.item);
    row["c_recursion"] = item_json(c);
    masa_ok = masa_ok && m.item.ok && c.ok;
    masa_rows.push_back(std::move(row));
  }
  r["masa"] = std::move(masa_rows);
  r["masa_ok"] = masa_ok;
  ok = ok && masa_ok;

  bool expectation_ok = true;
  json exp_rows = json::array();
  for (std::size_t n = 0; n < d.depth(); ++n) {
    const ExpectationResult e = verify_expectation(d, s, n, 200, 0x5eed, opt.cap);
    const KernelResult k = kernel_free_normalizers(d, s, n, opt.cap);
    json row;
    row["level"] = n + 1;
    row["expectation"] = item_json(e.item);
    row["faithful_samples"] = e.faithful_samples;
    row["kernel_dim"] = k.kernel_dim;
    row["free_normalizers"] = k.certificates.size();
    row["kernel"] = item_json(k.item);
    expectation_ok = expectation_ok && e.item.ok && k.item.ok;
    exp_rows.push_back(std::move(row));
  }
  r["expectation"] = std::move(exp_rows);
  r["expectation_ok"] = expectation_ok;
  ok = ok && expectation_ok;

  r["ok"] = ok;
  return {r.dump(2) + "\n", ok};
}

}  // namespace bratteli
