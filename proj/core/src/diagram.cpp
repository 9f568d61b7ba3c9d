#include "bratteli/diagram.hpp"

#include <sstream>

namespace bratteli {

LevelSpec::LevelSpec(std::initializer_list<long> s) {
  sizes.reserve(s.size());
  for (long v : s) sizes.emplace_back(v);
}

MultiplicityMatrix::MultiplicityMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}

MultiplicityMatrix::MultiplicityMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<BigInt>> converted;
  for (const auto& r : rows) {
    converted.emplace_back();
    for (long v : r) converted.back().emplace_back(v);
  }
  *this = MultiplicityMatrix(std::move(converted));
}

MultiplicityMatrix::MultiplicityMatrix(std::vector<std::vector<BigInt>> rows) {
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  entries_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "multiplicity matrix rows have unequal lengths");
    }
    for (auto& v : r) entries_.push_back(std::move(v));
  }
}

MultiplicityMatrix MultiplicityMatrix::identity(std::size_t n) {
  MultiplicityMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BigInt> MultiplicityMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool MultiplicityMatrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

bool MultiplicityMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn((*this)(i, j)) != 0) return false;
  }
  return true;
}

std::vector<BigInt> MultiplicityMatrix::apply(const std::vector<BigInt>& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  }
  std::vector<BigInt> out(rows_, BigInt(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

MultiplicityMatrix operator*(const MultiplicityMatrix& a, const MultiplicityMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  }
  MultiplicityMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::string MultiplicityMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string VertexRef::label() const {
  return "v" + std::to_string(level + 1) + "." + std::to_string(index + 1);
}

std::size_t PointSet::count_at_level(std::size_t level) const {
  std::size_t n = 0;
  for (const auto& v : members_) n += v.level == level ? 1 : 0;
  return n;
}

BigInt BratteliDiagram::in_degree(VertexRef v) const {
  BigInt total = 0;
  if (v.level == 0) return total;
  const auto& k = map(v.level - 1);
  for (std::size_t j = 0; j < k.cols(); ++j) total += k(v.index, j);
  return total;
}

BigInt BratteliDiagram::edges_into(std::size_t n) const {
  BigInt total = 0;
  if (n == 0) return total;
  const auto& k = map(n - 1);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    for (std::size_t j = 0; j < k.cols(); ++j) total += k(i, j);
  }
  return total;
}

namespace {

ValidationResult fail(ErrorCode code, std::optional<VertexRef> where, std::string msg) {
  return {code, where, std::move(msg)};
}

std::string level_label(std::size_t n) { return "level " + std::to_string(n + 1); }

ValidationResult check_map_entries(const MultiplicityMatrix& k, std::size_t source_level,
                                   const std::string& name) {
  for (std::size_t i = 0; i < k.rows(); ++i) {
    for (std::size_t j = 0; j < k.cols(); ++j) {
      if (sgn(k(i, j)) < 0) {
        return fail(ErrorCode::NegativeEntry, VertexRef{source_level, j},
                    name + " has a negative entry at row " + std::to_string(i + 1) +
                        ", column " + std::to_string(j + 1));
      }
    }
  }
  for (std::size_t j = 0; j < k.cols(); ++j) {
    if (k.column_is_zero(j)) {
      return fail(ErrorCode::ZeroColumn, VertexRef{source_level, j},
                  name + " has a zero column " + std::to_string(j + 1) +
                      " (connecting map not injective at " +
                      VertexRef{source_level, j}.label() + ")");
    }
  }
  return {};
}

}  // namespace

ValidationResult validate(const BratteliDiagram& d) {
  if (d.depth() == 0) {
    return fail(ErrorCode::EmptyLevel, std::nullopt, "diagram has no levels");
  }
  for (std::size_t n = 0; n < d.depth(); ++n) {
    if (d.width(n) == 0) {
      return fail(ErrorCode::EmptyLevel, std::nullopt, level_label(n) + " is empty");
    }
    for (std::size_t i = 0; i < d.width(n); ++i) {
      if (sgn(d.level(n).sizes[i]) <= 0) {
        return fail(ErrorCode::NonPositiveSize, VertexRef{n, i},
                    "size at " + VertexRef{n, i}.label() + " is not positive");
      }
    }
  }
  if (d.maps().size() + 1 != d.depth()) {
    return fail(ErrorCode::DimensionMismatch, std::nullopt,
                "expected " + std::to_string(d.depth() - 1) + " maps, found " +
                    std::to_string(d.maps().size()));
  }
  for (std::size_t n = 0; n + 1 < d.depth(); ++n) {
    const auto& k = d.map(n);
    if (k.rows() != d.width(n + 1) || k.cols() != d.width(n)) {
      return fail(ErrorCode::DimensionMismatch, std::nullopt,
                  "map from " + level_label(n) + " is " + std::to_string(k.rows()) + "x" +
                      std::to_string(k.cols()) + ", expected " +
                      std::to_string(d.width(n + 1)) + "x" + std::to_string(d.width(n)));
    }
    if (auto r = check_map_entries(k, n, "map from " + level_label(n)); !r) return r;
  }
  if (d.has_tail()) {
    const auto& t = *d.tail();
    std::size_t last = d.depth() - 1;
    if (t.rows() != d.width(last) || t.cols() != d.width(last)) {
      return fail(ErrorCode::DimensionMismatch, std::nullopt,
                  "tail must be " + std::to_string(d.width(last)) + "x" +
                      std::to_string(d.width(last)));
    }
    if (auto r = check_map_entries(t, last, "tail"); !r) return r;
  }
  const SlackProfile sigma = slack(d);
  for (std::size_t n = 1; n < d.depth(); ++n) {
    for (std::size_t i = 0; i < d.width(n); ++i) {
      if (sgn(sigma[n][i]) < 0) {
        return fail(ErrorCode::NegativeSlack, VertexRef{n, i},
                    "negative slack " + sigma[n][i].get_str() + " at " +
                        VertexRef{n, i}.label());
      }
    }
  }
  // An unrolled tail level has sizes T s_N and therefore zero slack, so a
  // square tail with nonzero columns needs no further check.
  return {};
}

void require_valid(const BratteliDiagram& d) {
  auto r = validate(d);
  if (!r) throw Error(*r.error, r.message);
}

SlackProfile slack(const BratteliDiagram& d) {
  SlackProfile sigma;
  sigma.reserve(d.depth());
  for (std::size_t n = 0; n < d.depth(); ++n) {
    if (n == 0) {
      sigma.push_back(d.level(0).sizes);
      continue;
    }
    const auto consumed = d.map(n - 1).apply(d.level(n - 1).sizes);
    std::vector<BigInt> row(d.width(n));
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = d.level(n).sizes[i] - consumed.at(i);
    }
    sigma.push_back(std::move(row));
  }
  return sigma;
}

MultiplicityMatrix telescope(const BratteliDiagram& d, std::size_t from, std::size_t to) {
  if (from > to || to >= d.depth()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "telescope: need from <= to < depth (got " + std::to_string(from) +
                    ", " + std::to_string(to) + ")");
  }
  auto product = MultiplicityMatrix::identity(d.width(from));
  for (std::size_t n = from; n < to; ++n) product = d.map(n) * product;
  return product;
}

BratteliDiagram extend(const BratteliDiagram& d, std::size_t count) {
  if (!d.has_tail()) throw Error(ErrorCode::NoTail, "extend: diagram has no tail");
  require_valid(d);
  auto levels = d.levels();
  auto maps = d.maps();
  const auto& t = *d.tail();
  for (std::size_t c = 0; c < count; ++c) {
    levels.emplace_back(t.apply(levels.back().sizes));
    maps.push_back(t);
  }
  BratteliDiagram out(std::move(levels), std::move(maps), t);
  require_valid(out);
  return out;
}

BratteliDiagram analysis_truncation(const BratteliDiagram& d, std::size_t unrollings) {
  return d.has_tail() ? extend(d, unrollings) : d;
}

BratteliDiagram truncate(const BratteliDiagram& d, std::size_t levels) {
  if (levels == 0 || levels > d.depth()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "truncate: level count " + std::to_string(levels) + " out of range");
  }
  if (levels == d.depth()) return d;
  std::vector<LevelSpec> ls(d.levels().begin(), d.levels().begin() + static_cast<std::ptrdiff_t>(levels));
  std::vector<MultiplicityMatrix> ms(d.maps().begin(),
                                     d.maps().begin() + static_cast<std::ptrdiff_t>(levels - 1));
  return BratteliDiagram(std::move(ls), std::move(ms));
}

}  // namespace bratteli
