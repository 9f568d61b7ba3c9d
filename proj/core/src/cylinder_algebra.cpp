#include "bratteli/cylinder_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace bratteli {

Generator::Generator(Path a, Path b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.range() != beta.range()) {
    throw Error(ErrorCode::DimensionMismatch, "generator paths end at " + alpha.range().label() +
                                                  " and " + beta.range().label());
  }
}

std::optional<Generator> multiply_generators(const Generator& x, const Generator& y) {
  if (x.beta.is_prefix_of(y.alpha)) {
    return Generator(x.alpha.extended(x.beta.continuation_in(y.alpha)), y.beta);
  }
  if (y.alpha.is_prefix_of(x.beta)) {
    return Generator(x.alpha, y.beta.extended(y.alpha.continuation_in(x.beta)));
  }
  return std::nullopt;
}

AlgebraElement::AlgebraElement(Generator g, GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(std::move(g), std::move(c));
}

GaussianRational AlgebraElement::coefficient(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void AlgebraElement::add_term(const Generator& g, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::size_t> AlgebraElement::level() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t l = terms_.begin()->first.level();
  for (const auto& [g, c] : terms_) {
    if (g.level() != l) return std::nullopt;
  }
  return l;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*Z(" << g.alpha.to_string() << " | " << g.beta.to_string() << ')';
  }
  return os.str();
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      if (auto g = multiply_generators(gx, gy)) out.add_term(*g, cx * cy);
    }
  }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) out.add_term(Generator(g.beta, g.alpha), c.conj());
  return out;
}

namespace {

void embed_term(const BratteliDiagram& d, const Generator& g, const GaussianRational& c,
                AlgebraElement& out) {
  const VertexRef v = g.range();
  if (v.level + 1 >= d.depth()) {
    throw Error(ErrorCode::NoNextLevel, "no level below " + v.label() + " to embed into");
  }
  const auto& k = d.map(v.level);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    auto copies = to_size(k(i, v.index));
    if (!copies) throw Error(ErrorCode::CapExceeded, "edge multiplicity too large");
    for (std::size_t copy = 0; copy < *copies; ++copy) {
      const EdgeId e{v.level, v.index, i, copy};
      out.add_term(Generator(g.alpha.extended(e), g.beta.extended(e)), c);
    }
  }
}

AlgebraElement embed_term_to(const BratteliDiagram& d, const Generator& g,
                             const GaussianRational& c, std::size_t level) {
  AlgebraElement current(g, c);
  for (std::size_t l = g.level(); l < level; ++l) current = embed(d, current);
  return current;
}

}  // namespace

AlgebraElement embed(const BratteliDiagram& d, const AlgebraElement& x) {
  if (!x.is_single_level()) {
    throw Error(ErrorCode::MixedLevel, "embed needs a single-level element");
  }
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) embed_term(d, g, c, out);
  return out;
}

AlgebraElement embed_to(const BratteliDiagram& d, const AlgebraElement& x, std::size_t level) {
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) {
    if (g.level() > level) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "cannot embed a level-" + std::to_string(g.level() + 1) + " term into level " +
                      std::to_string(level + 1));
    }
    out += embed_term_to(d, g, c, level);
  }
  return out;
}

AlgebraElement multiply_at_common_level(const BratteliDiagram& d, const AlgebraElement& x,
                                        const AlgebraElement& y) {
  std::size_t level = 0;
  for (const auto* e : {&x, &y}) {
    for (const auto& [g, c] : e->terms()) level = std::max(level, g.level());
  }
  const AlgebraElement xe = embed_to(d, x, level);
  const AlgebraElement ye = embed_to(d, y, level);
  // Same-level generators multiply as matrix units.
  AlgebraElement out;
  for (const auto& [gx, cx] : xe.terms()) {
    for (const auto& [gy, cy] : ye.terms()) {
      if (gx.beta == gy.alpha) out.add_term(Generator(gx.alpha, gy.beta), cx * cy);
    }
  }
  return out;
}

MatrixRealization::MatrixRealization(const BratteliDiagram& d, const PointSet& s,
                                     std::size_t level, std::size_t cap)
    : MatrixRealization(PathTable(d, s, level + 1, cap), level) {}

MatrixRealization::MatrixRealization(const PathTable& table, std::size_t level)
    : level_(level), paths_(table.level(level)) {
  std::size_t offset = 0;
  for (const auto& p : paths_) {
    block_sizes_.push_back(p.size());
    offsets_.push_back(offset);
    offset += p.size() * p.size();
  }
}

std::size_t MatrixRealization::dimension() const {
  std::size_t total = 0;
  for (auto m : block_sizes_) total += m * m;
  return total;
}

std::size_t MatrixRealization::diagonal_dimension() const {
  std::size_t total = 0;
  for (auto m : block_sizes_) total += m;
  return total;
}

std::size_t MatrixRealization::index_of(const Path& p) const {
  const VertexRef r = p.range();
  if (r.level != level_ || r.index >= paths_.size()) {
    throw Error(ErrorCode::MixedLevel,
                "path ending at " + r.label() + " is not in level " + std::to_string(level_ + 1));
  }
  const auto& list = paths_[r.index];
  auto it = std::lower_bound(list.begin(), list.end(), p, canonical_less);
  if (it == list.end() || *it != p) {
    throw Error(ErrorCode::IndexOutOfRange, "path " + p.to_string() + " does not start in S");
  }
  return static_cast<std::size_t>(it - list.begin());
}

Generator MatrixRealization::generator(std::size_t block, std::size_t row, std::size_t col) const {
  return Generator(paths_.at(block).at(row), paths_.at(block).at(col));
}

std::vector<Generator> MatrixRealization::generators() const {
  std::vector<Generator> out;
  out.reserve(dimension());
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    for (std::size_t a = 0; a < block_sizes_[i]; ++a) {
      for (std::size_t b = 0; b < block_sizes_[i]; ++b) out.push_back(generator(i, a, b));
    }
  }
  return out;
}

AlgebraElement MatrixRealization::block_identity(std::size_t block) const {
  AlgebraElement out;
  for (const auto& p : paths_.at(block)) out.add_term(Generator(p, p), GaussianRational(1));
  return out;
}

AlgebraElement MatrixRealization::identity() const {
  AlgebraElement out;
  for (std::size_t i = 0; i < paths_.size(); ++i) out += block_identity(i);
  return out;
}

std::size_t MatrixRealization::coordinate(const Generator& g) const {
  const std::size_t block = g.range().index;
  const std::size_t row = index_of(g.alpha);
  const std::size_t col = index_of(g.beta);
  return offsets_[block] + row * block_sizes_[block] + col;
}

Generator MatrixRealization::generator_at(std::size_t coordinate) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), coordinate);
  const auto block = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const std::size_t local = coordinate - offsets_[block];
  const std::size_t m = block_sizes_[block];
  if (m == 0 || local >= m * m) {
    throw Error(ErrorCode::IndexOutOfRange, "coordinate out of range");
  }
  return generator(block, local / m, local % m);
}

SparseVector MatrixRealization::coordinates(const AlgebraElement& x) const {
  SparseVector v;
  for (const auto& [g, c] : x.terms()) v.emplace(coordinate(g), c);
  return v;
}

AlgebraElement MatrixRealization::from_coordinates(const SparseVector& v) const {
  AlgebraElement out;
  for (const auto& [k, c] : v) out.add_term(generator_at(k), c);
  return out;
}

BlockMatrix MatrixRealization::realize(const AlgebraElement& x) const {
  BlockMatrix m(block_sizes_);
  for (const auto& [g, c] : x.terms()) {
    const std::size_t block = g.range().index;
    if (g.level() != level_) {
      throw Error(ErrorCode::MixedLevel, "cannot realize a level-" + std::to_string(g.level() + 1) +
                                             " generator at level " + std::to_string(level_ + 1));
    }
    m.block(block).add(index_of(g.alpha), index_of(g.beta), c);
  }
  return m;
}

AlgebraElement MatrixRealization::element(const BlockMatrix& m) const {
  if (m.block_sizes() != block_sizes_) {
    throw Error(ErrorCode::DimensionMismatch, "block shape does not match level " +
                                                  std::to_string(level_ + 1));
  }
  AlgebraElement out;
  for (std::size_t i = 0; i < m.block_count(); ++i) {
    for (const auto& [key, c] : m.block(i).entries()) {
      out.add_term(generator(i, key.first, key.second), c);
    }
  }
  return out;
}

VerificationItem MatrixRealization::verify_matrix_units() const {
  VerificationItem item{"matrix_units", true, level_, ""};
  auto fail = [&](const std::string& why) {
    item.ok = false;
    item.detail = why;
    return item;
  };
  struct Indexed {
    std::size_t block, row, col;
    Generator g;
  };
  std::vector<Indexed> gens;
  gens.reserve(dimension());
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    for (std::size_t a = 0; a < block_sizes_[i]; ++a) {
      for (std::size_t b = 0; b < block_sizes_[i]; ++b) gens.push_back({i, a, b, generator(i, a, b)});
    }
  }
  for (const auto& x : gens) {
    if (adjoint(AlgebraElement(x.g)) != AlgebraElement(Generator(x.g.beta, x.g.alpha))) {
      return fail("adjoint of a generator is not the swapped generator");
    }
    BlockMatrix expected(block_sizes_);
    expected.block(x.block).set(x.row, x.col, GaussianRational(1));
    if (realize(AlgebraElement(x.g)) != expected) {
      return fail("realization of a generator is not a matrix unit");
    }
    for (const auto& y : gens) {
      auto product = multiply_generators(x.g, y.g);
      const bool should_survive = x.block == y.block && x.col == y.row;
      if (product.has_value() != should_survive) {
        return fail(should_survive ? "product of composable units vanished"
                                   : "product of non-composable units is nonzero");
      }
      if (product && *product != generator(x.block, x.row, y.col)) {
        return fail("e_ab e_bd differs from e_ad");
      }
    }
  }
  item.detail = std::to_string(gens.size()) + " generators, " +
                std::to_string(gens.size() * gens.size()) + " products checked";
  return item;
}

BlockMatrix Homomorphism::apply(const BlockMatrix& x) const {
  BlockMatrix out(target_sizes);
  for (std::size_t j = 0; j < source_sizes.size(); ++j) {
    for (const auto& [key, c] : x.block(j).entries()) {
      BlockMatrix term = image(j, key.first, key.second);
      term *= c;
      out += term;
    }
  }
  return out;
}

Homomorphism standard_embedding(const std::vector<std::size_t>& source_sizes,
                                const std::vector<std::size_t>& target_sizes,
                                const MultiplicityMatrix& k) {
  if (k.rows() != target_sizes.size() || k.cols() != source_sizes.size()) {
    throw Error(ErrorCode::DimensionMismatch, "multiplicity matrix does not fit the algebras");
  }
  Homomorphism h{source_sizes, target_sizes, {}};
  h.images.resize(source_sizes.size());
  for (std::size_t j = 0; j < source_sizes.size(); ++j) {
    h.images[j].assign(source_sizes[j] * source_sizes[j], BlockMatrix(target_sizes));
  }
  for (std::size_t i = 0; i < target_sizes.size(); ++i) {
    std::size_t offset = 0;
    for (std::size_t j = 0; j < source_sizes.size(); ++j) {
      auto copies = to_size(k(i, j));
      if (!copies) throw Error(ErrorCode::DimensionMismatch, "multiplicity too large");
      const std::size_t m = source_sizes[j];
      for (std::size_t c = 0; c < *copies; ++c) {
        if (offset + m > target_sizes[i]) {
          throw Error(ErrorCode::DimensionMismatch,
                      "copies do not fit in target block " + std::to_string(i + 1));
        }
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            h.images[j][a * m + b].block(i).set(offset + a, offset + b, GaussianRational(1));
          }
        }
        offset += m;
      }
    }
  }
  return h;
}

Homomorphism realized_embedding(const BratteliDiagram& d, const MatrixRealization& from,
                                const MatrixRealization& to) {
  if (to.level() != from.level() + 1) {
    throw Error(ErrorCode::IndexOutOfRange, "realized_embedding needs consecutive levels");
  }
  Homomorphism h{from.block_sizes(), to.block_sizes(), {}};
  h.images.resize(from.block_count());
  for (std::size_t j = 0; j < from.block_count(); ++j) {
    const std::size_t m = from.block_sizes()[j];
    h.images[j].reserve(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        h.images[j].push_back(to.realize(embed(d, AlgebraElement(from.generator(j, a, b)))));
      }
    }
  }
  return h;
}

VerificationItem check_homomorphism(const Homomorphism& h) {
  VerificationItem item{"homomorphism", true, std::nullopt, ""};
  auto fail = [&](const std::string& why) {
    item.ok = false;
    item.detail = why;
    return item;
  };
  if (h.images.size() != h.source_sizes.size()) return fail("wrong number of source blocks");
  for (std::size_t j = 0; j < h.source_sizes.size(); ++j) {
    const std::size_t m = h.source_sizes[j];
    if (h.images[j].size() != m * m) return fail("wrong number of images for a block");
    for (const auto& img : h.images[j]) {
      if (img.block_sizes() != h.target_sizes) return fail("image has the wrong block shape");
    }
    const std::string where = " (source block " + std::to_string(j + 1) + ")";
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (h.image(j, a, b).adjoint() != h.image(j, b, a)) return fail("e_ab* != e_ba" + where);
        if (h.image(j, a, 0) * h.image(j, 0, b) != h.image(j, a, b)) {
          return fail("e_a0 e_0b != e_ab" + where);
        }
        BlockMatrix expected = a == b ? h.image(j, 0, 0) : BlockMatrix(h.target_sizes);
        if (h.image(j, 0, a) * h.image(j, b, 0) != expected) {
          return fail("e_0a e_b0 != delta_ab e_00" + where);
        }
      }
    }
  }
  for (std::size_t j = 0; j < h.source_sizes.size(); ++j) {
    for (std::size_t l = 0; l < h.source_sizes.size(); ++l) {
      if (j == l) continue;
      for (std::size_t a = 0; a < h.source_sizes[j]; ++a) {
        for (std::size_t b = 0; b < h.source_sizes[l]; ++b) {
          if (!(h.image(j, 0, a) * h.image(l, b, 0)).is_zero()) {
            return fail("images of blocks " + std::to_string(j + 1) + " and " +
                        std::to_string(l + 1) + " are not orthogonal");
          }
        }
      }
    }
  }
  return item;
}

MultiplicityMatrix multiplicities(const Homomorphism& h) {
  MultiplicityMatrix k(h.target_sizes.size(), h.source_sizes.size());
  for (std::size_t j = 0; j < h.source_sizes.size(); ++j) {
    if (h.source_sizes[j] == 0) continue;
    const auto& p = h.image(j, 0, 0);
    for (std::size_t i = 0; i < h.target_sizes.size(); ++i) {
      k(i, j) = static_cast<unsigned long>(p.block(i).rank());
    }
  }
  return k;
}

namespace {

SparseVector mat_vec(const SparseMatrix& m, const SparseVector& v) {
  SparseVector out;
  for (const auto& [key, value] : m.entries()) {
    auto it = v.find(key.second);
    if (it == v.end()) continue;
    out[key.first] += value * it->second;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

GaussianRational inner(const SparseVector& x, const SparseVector& y) {
  GaussianRational sum;
  for (const auto& [k, xv] : x) {
    auto it = y.find(k);
    if (it != y.end()) sum += xv.conj() * it->second;
  }
  return sum;
}

/// Orthonormal basis of the range of a projection, drawn from its columns
/// by Gram-Schmidt with exact normalization.
std::vector<SparseVector> orthonormal_range(const SparseMatrix& p) {
  const std::size_t target = p.rank();
  std::vector<SparseVector> basis;
  for (std::size_t c = 0; c < p.cols() && basis.size() < target; ++c) {
    SparseVector v = p.column(c);
    for (const auto& xi : basis) axpy(v, -inner(xi, v), xi);
    if (v.empty()) continue;
    Rational norm2 = 0;
    for (const auto& [k, value] : v) norm2 += value.norm_squared();
    auto norm = exact_sqrt(norm2);
    if (!norm) {
      throw Error(ErrorCode::NotExactlyRepresentable,
                  "range vector has squared norm " + norm2.get_str() +
                      ", which is not a rational square");
    }
    for (auto& [k, value] : v) value /= GaussianRational(*norm);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Orthonormal frame of each target block adapted to h: the vectors
/// h(e^j_{a0}) xi for xi running over a basis of range h(e^j_{00}), ordered
/// by (j, copy, a), followed by a basis of the unused subspace.
std::vector<std::vector<SparseVector>> adapted_frame(const Homomorphism& h) {
  std::vector<std::vector<SparseVector>> frame(h.target_sizes.size());
  for (std::size_t i = 0; i < h.target_sizes.size(); ++i) {
    SparseMatrix used(h.target_sizes[i], h.target_sizes[i]);
    for (std::size_t j = 0; j < h.source_sizes.size(); ++j) {
      const std::size_t m = h.source_sizes[j];
      if (m == 0) continue;
      for (const auto& xi : orthonormal_range(h.image(j, 0, 0).block(i))) {
        for (std::size_t a = 0; a < m; ++a) frame[i].push_back(mat_vec(h.image(j, a, 0).block(i), xi));
      }
      for (std::size_t a = 0; a < m; ++a) used += h.image(j, a, a).block(i);
    }
    const SparseMatrix unused = SparseMatrix::identity(h.target_sizes[i]) - used;
    for (auto& xi : orthonormal_range(unused)) frame[i].push_back(std::move(xi));
    if (frame[i].size() != h.target_sizes[i]) {
      throw Error(ErrorCode::NotHomomorphism,
                  "adapted frame of target block " + std::to_string(i + 1) + " is incomplete");
    }
  }
  return frame;
}

}  // namespace

Intertwiner find_intertwiner(const Homomorphism& phi, const Homomorphism& psi) {
  if (phi.source_sizes != psi.source_sizes || phi.target_sizes != psi.target_sizes) {
    throw Error(ErrorCode::MultiplicityMismatch, "homomorphisms act between different algebras");
  }
  for (const auto* h : {&phi, &psi}) {
    auto check = check_homomorphism(*h);
    if (!check.ok) throw Error(ErrorCode::NotHomomorphism, check.detail);
  }
  const auto k_phi = multiplicities(phi);
  const auto k_psi = multiplicities(psi);
  if (k_phi != k_psi) {
    throw Error(ErrorCode::MultiplicityMismatch,
                "multiplicities " + k_phi.to_string() + " and " + k_psi.to_string() + " differ");
  }
  const auto frame_phi = adapted_frame(phi);
  const auto frame_psi = adapted_frame(psi);

  // u = sum_t xi^phi_t (xi^psi_t)*: carries psi's frame onto phi's.
  Intertwiner u{BlockMatrix(phi.target_sizes)};
  for (std::size_t i = 0; i < phi.target_sizes.size(); ++i) {
    for (std::size_t t = 0; t < frame_phi[i].size(); ++t) {
      for (const auto& [r, x] : frame_phi[i][t]) {
        for (const auto& [c, y] : frame_psi[i][t]) u.unitary.block(i).add(r, c, x * y.conj());
      }
    }
  }
  return u;
}

bool is_unitary(const BlockMatrix& u) {
  const auto id = BlockMatrix::identity(u.block_sizes());
  return u.adjoint() * u == id && u * u.adjoint() == id;
}

bool intertwines(const BlockMatrix& u, const Homomorphism& phi, const Homomorphism& psi) {
  if (phi.source_sizes != psi.source_sizes) return false;
  const BlockMatrix u_star = u.adjoint();
  for (std::size_t j = 0; j < phi.source_sizes.size(); ++j) {
    for (std::size_t x = 0; x < phi.images[j].size(); ++x) {
      if (u * psi.images[j][x] * u_star != phi.images[j][x]) return false;
    }
  }
  return true;
}

namespace {

MultiplicityMatrix multiplicity_between(const BratteliDiagram& d, const MatrixRealization& from,
                                        const MatrixRealization& to) {
  MultiplicityMatrix k(to.block_count(), from.block_count());
  for (std::size_t j = 0; j < from.block_count(); ++j) {
    const std::size_t m = from.block_sizes()[j];
    if (m == 0) continue;
    const BlockMatrix image = to.realize(embed(d, from.block_identity(j)));
    for (std::size_t i = 0; i < to.block_count(); ++i) {
      const std::size_t r = image.block(i).rank();
      if (r % m != 0) {
        throw Error(ErrorCode::NotHomomorphism,
                    "rank " + std::to_string(r) + " in block " + std::to_string(i + 1) +
                        " is not a multiple of " + std::to_string(m));
      }
      k(i, j) = static_cast<unsigned long>(r / m);
    }
  }
  return k;
}

std::optional<std::vector<std::size_t>> sizes_as_size_t(const LevelSpec& level) {
  std::vector<std::size_t> out;
  for (const auto& s : level.sizes) {
    auto v = to_size(s);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

}  // namespace

MultiplicityMatrix multiplicity_of_embedding(const BratteliDiagram& d, const PointSet& s,
                                             std::size_t n, std::size_t cap) {
  if (n + 1 >= d.depth()) {
    throw Error(ErrorCode::NoNextLevel, "level " + std::to_string(n + 1) + " has no successor");
  }
  PathTable table(d, s, n + 2, cap);
  return multiplicity_between(d, MatrixRealization(table, n), MatrixRealization(table, n + 1));
}

TowerReport verify_tower(const BratteliDiagram& d, const PointSet& s, std::size_t up_to,
                         std::size_t cap) {
  if (up_to == 0 || up_to > d.depth()) {
    throw Error(ErrorCode::IndexOutOfRange, "verify_tower: up_to must be in 1.." +
                                                std::to_string(d.depth()));
  }
  PathTable table(d, s, up_to, cap);
  std::vector<MatrixRealization> algebras;
  algebras.reserve(up_to);
  for (std::size_t n = 0; n < up_to; ++n) algebras.emplace_back(table, n);

  TowerReport report;
  report.summary = {"tower", true, std::nullopt, ""};
  for (std::size_t n = 0; n < up_to; ++n) {
    const auto& b = algebras[n];
    TowerLevel t;
    t.level = n;
    t.block_sizes = b.block_sizes();
    t.dimension = b.dimension();
    t.expected_dimension = 0;
    for (const auto& size : d.level(n).sizes) t.expected_dimension += size * size;
    t.dimension_ok = BigInt(static_cast<unsigned long>(t.dimension)) == t.expected_dimension;
    auto units = b.verify_matrix_units();
    t.matrix_units_ok = units.ok;
    std::vector<std::string> notes;
    if (!t.dimension_ok) {
      notes.push_back("dim B_" + std::to_string(n + 1) + " = " + std::to_string(t.dimension) +
                      " but sum of squared sizes is " + t.expected_dimension.get_str());
    }
    if (!units.ok) notes.push_back(units.detail);

    if (n + 1 < up_to) {
      const auto& next = algebras[n + 1];
      t.multiplicities = multiplicity_between(d, b, next);
      t.multiplicities_ok = *t.multiplicities == d.map(n);
      if (!t.multiplicities_ok) {
        notes.push_back("extracted multiplicities " + t.multiplicities->to_string() +
                        " differ from K = " + d.map(n).to_string());
      }
      t.intertwiner_ok = false;
      auto src = sizes_as_size_t(d.level(n));
      auto dst = sizes_as_size_t(d.level(n + 1));
      if (!src || !dst || *src != b.block_sizes() || *dst != next.block_sizes()) {
        notes.push_back("path counts differ from sizes; no standard embedding to compare with");
      } else {
        try {
          const Homomorphism standard = standard_embedding(*src, *dst, d.map(n));
          const Homomorphism realized = realized_embedding(d, b, next);
          const Intertwiner u = find_intertwiner(standard, realized);
          t.intertwiner_ok = is_unitary(u.unitary) && intertwines(u.unitary, standard, realized);
          if (!t.intertwiner_ok) notes.push_back("intertwiner failed the unitary/Ad check");
        } catch (const Error& e) {
          notes.push_back(std::string(to_string(e.code())) + ": " + e.what());
        }
      }
    }
    for (std::size_t k = 0; k < notes.size(); ++k) t.detail += (k ? "; " : "") + notes[k];
    if (!t.ok() && report.summary.ok) {
      report.summary.ok = false;
      report.summary.level = n;
      report.summary.detail = "level " + std::to_string(n + 1) + ": " + t.detail;
    }
    report.levels.push_back(std::move(t));
  }
  if (report.summary.ok) {
    report.summary.detail = "tower verified through level " + std::to_string(up_to);
  }
  return report;
}

}  // namespace bratteli
