#include "bratteli/diagonal.hpp"

#include <random>

#include "bratteli/sampling.hpp"

namespace bratteli {

namespace {

std::vector<AlgebraElement> build_D_from(const BratteliDiagram& d, const PointSet& s,
                                         const PathTable& table, std::size_t level) {
  std::vector<AlgebraElement> basis;
  if (level > 0) {
    const auto& k = d.map(level - 1);
    for (std::size_t i = 0; i < k.rows(); ++i) {
      for (std::size_t j = 0; j < k.cols(); ++j) {
        auto copies = to_size(k(i, j));
        if (!copies) throw Error(ErrorCode::CapExceeded, "edge multiplicity too large");
        for (std::size_t c = 0; c < *copies; ++c) {
          const EdgeId e{level - 1, j, i, c};
          AlgebraElement f;
          for (const auto& gamma : table.at({level - 1, j})) {
            const Path alpha = gamma.extended(e);
            f.add_term(Generator(alpha, alpha), GaussianRational(1));
          }
          if (!f.is_zero()) basis.push_back(std::move(f));
        }
      }
    }
  }
  for (std::size_t i = 0; i < d.width(level); ++i) {
    const VertexRef v{level, i};
    if (s.contains(v)) basis.emplace_back(Generator(Path(v), Path(v)));
  }
  return basis;
}

std::vector<AlgebraElement> build_C_from(const PathTable& table, std::size_t level) {
  std::vector<AlgebraElement> basis;
  for (const auto& paths : table.level(level)) {
    for (const auto& alpha : paths) basis.emplace_back(Generator(alpha, alpha));
  }
  return basis;
}

std::vector<SparseVector> coordinates_of(const MatrixRealization& r,
                                         const std::vector<AlgebraElement>& xs) {
  std::vector<SparseVector> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(r.coordinates(x));
  return out;
}

/// Adds the entries of x E - E x = 0 for an unknown m x m block x, with
/// x_{ab} stored at a * m + b.
void add_commutator_equations(RowEchelon& system, const SparseMatrix& e, std::size_t m) {
  std::map<std::size_t, SparseVector> equations;
  auto bump = [&](std::size_t eq, std::size_t var, const GaussianRational& v) {
    auto& row = equations[eq];
    auto [it, inserted] = row.try_emplace(var, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    }
  };
  for (const auto& [key, v] : e.entries()) {
    const auto [r, c] = key;
    // (x E)_{a c} picks up x_{a r} E_{r c}
    for (std::size_t a = 0; a < m; ++a) bump(a * m + c, a * m + r, v);
    // (E x)_{r b} picks up E_{r c} x_{c b}
    for (std::size_t b = 0; b < m; ++b) bump(r * m + b, c * m + b, -v);
  }
  for (auto& [eq, row] : equations) {
    if (!row.empty()) system.insert(std::move(row));
  }
}

struct CommutantSolver {
  const MatrixRealization& level;
  std::vector<RowEchelon> systems;

  explicit CommutantSolver(const MatrixRealization& l) : level(l) {
    for (auto m : l.block_sizes()) systems.emplace_back(m * m);
  }

  void commute_with(const BlockMatrix& e) {
    for (std::size_t i = 0; i < systems.size(); ++i) {
      if (!e.block(i).is_zero()) add_commutator_equations(systems[i], e.block(i), level.block_sizes()[i]);
    }
  }

  std::vector<AlgebraElement> solutions() const {
    std::vector<AlgebraElement> basis;
    for (std::size_t i = 0; i < systems.size(); ++i) {
      const std::size_t m = level.block_sizes()[i];
      for (const auto& v : systems[i].nullspace()) {
        AlgebraElement x;
        for (const auto& [local, c] : v) x.add_term(level.generator(i, local / m, local % m), c);
        basis.push_back(std::move(x));
      }
    }
    return basis;
  }
};

std::vector<BlockMatrix> embedded_units(const BratteliDiagram& d, const MatrixRealization& from,
                                        const MatrixRealization& to) {
  std::vector<BlockMatrix> out;
  for (const auto& g : from.generators()) out.push_back(to.realize(embed(d, AlgebraElement(g))));
  return out;
}

bool is_diagonal_element(const AlgebraElement& x) {
  for (const auto& [g, c] : x.terms()) {
    if (!g.is_diagonal()) return false;
  }
  return true;
}

std::size_t as_count(const BigInt& v) {
  auto n = to_size(v);
  if (!n) throw Error(ErrorCode::CapExceeded, "count too large");
  return *n;
}

}  // namespace

std::vector<AlgebraElement> build_D(const BratteliDiagram& d, const PointSet& s, std::size_t level,
                                    std::size_t cap) {
  PathTable table(d, s, level + 1, cap);
  return build_D_from(d, s, table, level);
}

std::vector<AlgebraElement> build_C(const BratteliDiagram& d, const PointSet& s, std::size_t level,
                                    std::size_t cap) {
  PathTable table(d, s, level + 1, cap);
  return build_C_from(table, level);
}

DiagonalTower build_diagonal_tower(const BratteliDiagram& d, const PointSet& s,
                                   std::size_t levels, std::size_t cap) {
  PathTable table(d, s, levels, cap);
  DiagonalTower tower;
  for (std::size_t n = 0; n < levels; ++n) {
    tower.C.push_back(build_C_from(table, n));
    tower.D.push_back(build_D_from(d, s, table, n));
  }
  return tower;
}

VerificationItem verify_C_recursion(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                                    std::size_t cap) {
  VerificationItem item{"C_recursion", true, n + 1, ""};
  if (n + 1 >= d.depth()) throw Error(ErrorCode::NoNextLevel, "no level after " + std::to_string(n + 1));
  PathTable table(d, s, n + 2, cap);
  const MatrixRealization next(table, n + 1);
  const auto c_n = build_C_from(table, n);
  const auto d_next = build_D_from(d, s, table, n + 1);
  const auto c_next = build_C_from(table, n + 1);
  const std::size_t columns = next.dimension();

  // Products c f use the cross-level product rule directly.
  std::vector<AlgebraElement> products = d_next;
  for (const auto& c : c_n) {
    for (const auto& f : d_next) {
      auto p = multiply(c, f);
      if (!p.is_zero()) products.push_back(std::move(p));
    }
  }
  const auto lhs = coordinates_of(next, products);
  const auto rhs = coordinates_of(next, c_next);
  const bool forward = span_contains(rhs, lhs, columns);
  const bool backward = span_contains(lhs, rhs, columns);

  std::vector<AlgebraElement> embedded;
  for (const auto& c : c_n) embedded.push_back(embed(d, c));
  const bool coherent = span_contains(rhs, coordinates_of(next, embedded), columns);

  item.ok = forward && backward && coherent;
  if (!forward) item.detail = "span C_n D_{n+1} is not inside C_{n+1}";
  else if (!backward) item.detail = "C_{n+1} is not inside span C_n D_{n+1}";
  else if (!coherent) item.detail = "embed(C_n) is not inside C_{n+1}";
  else item.detail = "dim C_" + std::to_string(n + 2) + " = " + std::to_string(c_next.size());
  return item;
}

std::vector<AlgebraElement> relative_commutant(const BratteliDiagram& d, const PointSet& s,
                                               std::size_t n, std::size_t cap) {
  if (n + 1 >= d.depth()) throw Error(ErrorCode::NoNextLevel, "no level after " + std::to_string(n + 1));
  PathTable table(d, s, n + 2, cap);
  const MatrixRealization here(table, n);
  const MatrixRealization next(table, n + 1);
  CommutantSolver solver(next);
  for (const auto& e : embedded_units(d, here, next)) solver.commute_with(e);
  return solver.solutions();
}

MasaResult verify_masa(const BratteliDiagram& d, const PointSet& s, std::size_t n, std::size_t cap) {
  if (n + 1 >= d.depth()) throw Error(ErrorCode::NoNextLevel, "no level after " + std::to_string(n + 1));
  PathTable table(d, s, n + 2, cap);
  MasaResult r = verify_masa_with(d, s, n, build_D_from(d, s, table, n + 1), cap);
  if (r.item.ok && r.diagonal_dim != r.in_edges + r.pointed) {
    r.item.ok = false;
    r.item.detail = "dim D = " + std::to_string(r.diagonal_dim) + " but in-edges + pointed = " +
                    std::to_string(r.in_edges + r.pointed);
  }
  return r;
}

MasaResult verify_masa_with(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                            const std::vector<AlgebraElement>& candidate, std::size_t cap) {
  if (n + 1 >= d.depth()) throw Error(ErrorCode::NoNextLevel, "no level after " + std::to_string(n + 1));
  PathTable table(d, s, n + 2, cap);
  const MatrixRealization here(table, n);
  const MatrixRealization next(table, n + 1);

  MasaResult r;
  r.item = {"masa", true, n + 1, ""};
  r.in_edges = as_count(d.edges_into(n + 1));
  r.pointed = s.count_at_level(n + 1);
  auto fail = [&](std::string why) {
    r.item.ok = false;
    if (r.item.detail.empty()) r.item.detail = std::move(why);
  };

  const auto units = embedded_units(d, here, next);
  std::vector<BlockMatrix> cand;
  for (const auto& f : candidate) cand.push_back(next.realize(f));
  const auto cand_coords = coordinates_of(next, candidate);
  r.diagonal_dim = rank(cand_coords, next.dimension());

  for (std::size_t a = 0; a < cand.size() && r.item.ok; ++a) {
    for (const auto& e : units) {
      if (cand[a] * e != e * cand[a]) {
        fail("candidate element " + candidate[a].to_string() + " does not commute with B_n");
        break;
      }
    }
  }
  for (std::size_t a = 0; a < cand.size() && r.item.ok; ++a) {
    for (std::size_t b = a + 1; b < cand.size(); ++b) {
      if (cand[a] * cand[b] != cand[b] * cand[a]) {
        fail("not abelian: " + candidate[a].to_string() + " and " + candidate[b].to_string() +
             " do not commute");
        break;
      }
    }
  }

  CommutantSolver commutant(next);
  for (const auto& e : units) commutant.commute_with(e);
  r.relative_commutant_dim = commutant.solutions().size();

  CommutantSolver centralizer = commutant;
  for (const auto& f : cand) centralizer.commute_with(f);
  const auto central = centralizer.solutions();
  r.centralizer_dim = central.size();

  if (r.item.ok) {
    const auto central_coords = coordinates_of(next, central);
    RowEchelon span_d(next.dimension());
    for (const auto& v : cand_coords) span_d.insert(v);
    for (std::size_t k = 0; k < central.size(); ++k) {
      if (!span_d.contains(central_coords[k])) {
        fail("centralizer element outside the candidate: " + central[k].to_string());
        break;
      }
    }
    if (r.item.ok && r.centralizer_dim != r.diagonal_dim) {
      fail("centralizer has dimension " + std::to_string(r.centralizer_dim) + ", candidate " +
           std::to_string(r.diagonal_dim));
    }
  }
  if (r.item.ok) {
    r.item.detail = "dim D = " + std::to_string(r.diagonal_dim) + " inside relative commutant of dim " +
                    std::to_string(r.relative_commutant_dim);
  }
  return r;
}

AlgebraElement expectation_P(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [g, c] : x.terms()) {
    if (g.is_diagonal()) out.add_term(g, c);
  }
  return out;
}

ExpectationResult verify_expectation(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                                     std::size_t samples, std::uint64_t seed, std::size_t cap) {
  ExpectationResult r;
  r.item = {"expectation", true, n, ""};
  auto fail = [&](std::string why) {
    if (r.item.ok) r.item.detail = std::move(why);
    r.item.ok = false;
  };
  const bool has_next = n + 1 < d.depth();
  PathTable table(d, s, has_next ? n + 2 : n + 1, cap);
  const MatrixRealization here(table, n);
  const auto c_basis = build_C_from(table, n);
  const auto c_coords = coordinates_of(here, c_basis);

  std::vector<SparseVector> range;
  for (const auto& g : here.generators()) {
    const AlgebraElement x(g);
    const AlgebraElement p = expectation_P(x);
    if (expectation_P(p) != p) fail("P is not idempotent");
    if (!is_diagonal_element(p)) fail("P leaves the diagonal");
    range.push_back(here.coordinates(p));
    if (has_next && expectation_P(embed(d, x)) != embed(d, p)) {
      fail("P does not commute with embed on " + x.to_string());
    }
  }
  if (!span_equal(range, c_coords, here.dimension())) fail("range of P is not span C_n");

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < std::min<std::size_t>(samples, 20) && r.item.ok; ++t) {
    const AlgebraElement x = random_element(here, rng);
    for (const auto& c : c_basis) {
      for (const auto& c2 : c_basis) {
        if (expectation_P(c * x * c2) != c * expectation_P(x) * c2) {
          fail("P(c x c') != c P(x) c' for x = " + x.to_string());
          break;
        }
      }
      if (!r.item.ok) break;
    }
  }

  for (std::size_t t = 0; t < samples && r.item.ok; ++t) {
    const AlgebraElement y = t == 0 ? AlgebraElement() : random_element(here, rng);
    const AlgebraElement positive = adjoint(y) * y;
    const AlgebraElement p = expectation_P(positive);
    // The diagonal of y*y in the realization holds the squared column norms
    // of y, so it vanishes exactly when y does.
    const BlockMatrix ry = here.realize(y);
    const BlockMatrix gram = ry.adjoint() * ry;
    BlockMatrix diag(here.block_sizes());
    for (std::size_t i = 0; i < gram.block_count(); ++i) {
      for (const auto& [key, v] : gram.block(i).entries()) {
        if (key.first == key.second) diag.block(i).set(key.first, key.second, v);
      }
    }
    if (here.realize(p) != diag) fail("P(y*y) disagrees with the diagonal of the realized y*y");
    if (p.is_zero() != y.is_zero()) fail("P(y*y) = 0 for nonzero y = " + y.to_string());
    ++r.faithful_samples;
  }
  if (r.item.ok) {
    r.item.detail = "idempotent, C_n-bimodular, embed-compatible, faithful on " +
                    std::to_string(r.faithful_samples) + " samples";
  }
  return r;
}

KernelResult kernel_free_normalizers(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                                     std::size_t cap) {
  KernelResult r;
  r.item = {"free_normalizers", true, n, ""};
  PathTable table(d, s, n + 1, cap);
  const MatrixRealization here(table, n);
  const auto c_basis = build_C_from(table, n);

  std::vector<SparseVector> certified;
  for (const auto& g : here.generators()) {
    if (g.is_diagonal()) continue;
    FreeNormalizerCertificate cert{g, false, true};
    const AlgebraElement x(g);
    const AlgebraElement x_star = adjoint(x);
    cert.square_zero = (x * x).is_zero();
    for (const auto& b : c_basis) {
      if (!is_diagonal_element(x * b * x_star) || !is_diagonal_element(x_star * b * x)) {
        cert.normalizes = false;
        break;
      }
    }
    if (!cert.ok() && r.item.ok) {
      r.item.ok = false;
      r.item.detail = "generator " + x.to_string() + " is not a free normalizer";
    }
    if (!expectation_P(x).is_zero() && r.item.ok) {
      r.item.ok = false;
      r.item.detail = "off-diagonal generator outside ker P";
    }
    certified.push_back(here.coordinates(x));
    r.certificates.push_back(std::move(cert));
  }

  // ker P as the nullspace of the coordinate functionals x -> x_{aa}.
  RowEchelon p_rows(here.dimension());
  for (const auto& c : c_basis) p_rows.insert(here.coordinates(c));
  const auto kernel = p_rows.nullspace();
  r.kernel_dim = kernel.size();
  if (r.item.ok && !span_equal(kernel, certified, here.dimension())) {
    r.item.ok = false;
    r.item.detail = "certified free normalizers do not span ker P";
  }
  if (r.item.ok) {
    r.item.detail = std::to_string(r.certificates.size()) +
                    " square-zero normalizers span ker P of dim " + std::to_string(r.kernel_dim);
  }
  return r;
}

}  // namespace bratteli
