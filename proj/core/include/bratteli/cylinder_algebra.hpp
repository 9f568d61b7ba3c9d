#ifndef BRATTELI_CYLINDER_ALGEBRA_HPP
#define BRATTELI_CYLINDER_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bratteli/diagram.hpp"
#include "bratteli/linear_algebra.hpp"
#include "bratteli/path_space.hpp"
#include "bratteli/verification.hpp"

namespace bratteli {

/// Formal cylinder generator 1_{Z(alpha, beta)}; alpha and beta share their
/// range. Within one level it behaves as the matrix unit e_{alpha beta}.
struct Generator {
  Path alpha;
  Path beta;

  Generator() = default;
  /// Throws Error(DimensionMismatch) if the ranges differ.
  Generator(Path a, Path b);

  VertexRef range() const { return alpha.range(); }
  std::size_t level() const { return range().level; }
  bool is_diagonal() const { return alpha == beta; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// The product rule on generators: nonzero only when one of beta, gamma
/// continues the other.
std::optional<Generator> multiply_generators(const Generator& x, const Generator& y);

/// Finite Q(i)-linear combination of generators. Zero coefficients are
/// never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Generator, GaussianRational>;

  AlgebraElement() = default;
  explicit AlgebraElement(Generator g, GaussianRational c = GaussianRational(1));

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const Generator& g) const;

  void add_term(const Generator& g, const GaussianRational& c);

  /// Common level of all terms; nullopt for zero or mixed-level elements.
  std::optional<std::size_t> level() const;
  bool is_single_level() const { return is_zero() || level().has_value(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const GaussianRational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const GaussianRational& s) { return a *= s; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Bilinear extension of the generator product rule. Works for mixed-level
/// operands without reference to a diagram.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

/// Conjugate-linear generator swap.
AlgebraElement adjoint(const AlgebraElement& x);

/// 1_{Z(alpha,beta)} -> sum over edges e leaving r(alpha) of 1_{Z(alpha e, beta e)}.
/// Requires a single-level element; throws NoNextLevel at the last level
/// and MixedLevel for mixed input.
AlgebraElement embed(const BratteliDiagram& d, const AlgebraElement& x);

/// Repeated embed up to `level`.
AlgebraElement embed_to(const BratteliDiagram& d, const AlgebraElement& x, std::size_t level);

/// Second route for products: embed every term to the deepest level present
/// and multiply there, where only the matrix-unit rule applies.
AlgebraElement multiply_at_common_level(const BratteliDiagram& d, const AlgebraElement& x,
                                        const AlgebraElement& y);

/// Concrete identification B_n = M_{|F^n_1|} + ... + M_{|F^n_p|}: the
/// generator e_{alpha beta} with range v^n_i becomes the standard matrix
/// unit at (index(alpha), index(beta)) of block i, with paths in canonical
/// order.
class MatrixRealization {
 public:
  MatrixRealization(const BratteliDiagram& d, const PointSet& s, std::size_t level,
                    std::size_t cap = kDefaultEnumerationCap);
  MatrixRealization(const PathTable& table, std::size_t level);

  std::size_t level() const { return level_; }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  std::size_t block_count() const { return block_sizes_.size(); }
  /// sum of squared block sizes
  std::size_t dimension() const;
  std::size_t diagonal_dimension() const;

  const std::vector<Path>& paths(std::size_t block) const { return paths_.at(block); }
  std::size_t index_of(const Path& p) const;

  Generator generator(std::size_t block, std::size_t row, std::size_t col) const;
  std::vector<Generator> generators() const;
  AlgebraElement block_identity(std::size_t block) const;
  AlgebraElement identity() const;

  /// Flat coordinate of a generator: block offset + row * size + col.
  std::size_t coordinate(const Generator& g) const;
  Generator generator_at(std::size_t coordinate) const;
  SparseVector coordinates(const AlgebraElement& x) const;
  AlgebraElement from_coordinates(const SparseVector& v) const;

  BlockMatrix realize(const AlgebraElement& x) const;
  AlgebraElement element(const BlockMatrix& m) const;

  /// Exhaustive check of e_{ab} e_{cd} = delta_{bc} e_{ad}, e_{ab}* = e_{ba},
  /// block orthogonality, and agreement of realize() with the unit matrices.
  VerificationItem verify_matrix_units() const;

 private:
  std::size_t level_ = 0;
  std::vector<std::vector<Path>> paths_;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> offsets_;
};

inline MatrixRealization level_algebra(const BratteliDiagram& d, const PointSet& s,
                                       std::size_t level,
                                       std::size_t cap = kDefaultEnumerationCap) {
  return MatrixRealization(d, s, level, cap);
}

/// A *-homomorphism between multimatrix algebras, given by the images of
/// the standard matrix units of the source.
struct Homomorphism {
  std::vector<std::size_t> source_sizes;
  std::vector<std::size_t> target_sizes;
  /// images[j][a * m_j + b] is the image of e^j_{ab}.
  std::vector<std::vector<BlockMatrix>> images;

  const BlockMatrix& image(std::size_t block, std::size_t a, std::size_t b) const {
    return images.at(block).at(a * source_sizes.at(block) + b);
  }
  BlockMatrix apply(const BlockMatrix& x) const;
};

/// In target block i, copies of source block j are placed contiguously in
/// order of j, k_{ij} times each; unused coordinates come last.
Homomorphism standard_embedding(const std::vector<std::size_t>& source_sizes,
                                const std::vector<std::size_t>& target_sizes,
                                const MultiplicityMatrix& k);

/// The inclusion iota_n of B_n in B_{n+1}, realized through both levels.
Homomorphism realized_embedding(const BratteliDiagram& d, const MatrixRealization& from,
                                const MatrixRealization& to);

/// Checks that the images form a system of matrix units with orthogonal
/// blocks. Generating relations only: e_{a0} e_{0b} = e_{ab},
/// e_{0a} e_{b0} = delta_{ab} e_{00}, e_{ab}* = e_{ba}, cross-block products 0.
VerificationItem check_homomorphism(const Homomorphism& h);

/// k_{ij} = rank of the image of e^j_{00} inside target block i.
MultiplicityMatrix multiplicities(const Homomorphism& h);

struct Intertwiner {
  BlockMatrix unitary;
};

/// A unitary u with u psi(x) u* = phi(x) for every matrix unit x.
///
/// Throws MultiplicityMismatch when the multiplicity matrices differ,
/// NotHomomorphism when an input fails the matrix-unit relations, and
/// NotExactlyRepresentable when an orthonormal frame for some range
/// projection needs an irrational normalization.
Intertwiner find_intertwiner(const Homomorphism& phi, const Homomorphism& psi);

bool is_unitary(const BlockMatrix& u);
/// u psi(x) u* == phi(x) on every matrix unit x.
bool intertwines(const BlockMatrix& u, const Homomorphism& phi, const Homomorphism& psi);

/// Pushes each block identity of B_n through embed and reads off the rank
/// it occupies in each block of B_{n+1}, divided by |F^n_j|.
MultiplicityMatrix multiplicity_of_embedding(const BratteliDiagram& d, const PointSet& s,
                                             std::size_t n,
                                             std::size_t cap = kDefaultEnumerationCap);

struct TowerLevel {
  std::size_t level = 0;
  std::vector<std::size_t> block_sizes;
  std::size_t dimension = 0;
  BigInt expected_dimension;
  bool dimension_ok = false;
  bool matrix_units_ok = false;
  /// Present for every level except the last checked one.
  std::optional<MultiplicityMatrix> multiplicities;
  bool multiplicities_ok = true;
  bool intertwiner_ok = true;
  std::string detail;

  bool ok() const {
    return dimension_ok && matrix_units_ok && multiplicities_ok && intertwiner_ok;
  }
};

struct TowerReport {
  std::vector<TowerLevel> levels;
  VerificationItem summary;
};

/// For every level n < up_to: dim B_n = sum [n,i]^2, matrix-unit relations,
/// extracted multiplicities = K^(n), and an exact unitary intertwiner
/// between the realized and the standard embedding.
TowerReport verify_tower(const BratteliDiagram& d, const PointSet& s, std::size_t up_to,
                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace bratteli

#endif  // BRATTELI_CYLINDER_ALGEBRA_HPP
