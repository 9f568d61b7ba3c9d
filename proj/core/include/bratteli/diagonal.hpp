#ifndef BRATTELI_DIAGONAL_HPP
#define BRATTELI_DIAGONAL_HPP

#include <cstdint>
#include <vector>

#include "bratteli/cylinder_algebra.hpp"
#include "bratteli/verification.hpp"

namespace bratteli {

/// D_n: one f_e for every edge e into level n (sum of e_{aa} over the paths
/// a whose last edge is e) and one f_v = e_{vv} for every pointed vertex v
/// of level n. An f_e that would be zero (no path reaches s(e)) is omitted.
std::vector<AlgebraElement> build_D(const BratteliDiagram& d, const PointSet& s, std::size_t level,
                                    std::size_t cap = kDefaultEnumerationCap);

/// C_n: every diagonal generator e_{aa} with r(a) in level n.
std::vector<AlgebraElement> build_C(const BratteliDiagram& d, const PointSet& s, std::size_t level,
                                    std::size_t cap = kDefaultEnumerationCap);

struct DiagonalTower {
  std::vector<std::vector<AlgebraElement>> C;
  std::vector<std::vector<AlgebraElement>> D;
};

DiagonalTower build_diagonal_tower(const BratteliDiagram& d, const PointSet& s,
                                   std::size_t levels, std::size_t cap = kDefaultEnumerationCap);

/// C_{n+1} = span(C_n~ D_{n+1}), where C_n~ is C_n with the identity
/// adjoined, and embed(C_n) is contained in C_{n+1}. Both inclusions are
/// checked by exact row reduction in the coordinates of level n+1.
VerificationItem verify_C_recursion(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Basis of B_{n+1} intersected with the commutant of embed(B_n), from the
/// exact nullspace of the commutator equations against every matrix unit
/// of B_n.
std::vector<AlgebraElement> relative_commutant(const BratteliDiagram& d, const PointSet& s,
                                               std::size_t n,
                                               std::size_t cap = kDefaultEnumerationCap);

struct MasaResult {
  VerificationItem item;
  std::size_t relative_commutant_dim = 0;
  std::size_t diagonal_dim = 0;
  std::size_t centralizer_dim = 0;
  std::size_t in_edges = 0;
  std::size_t pointed = 0;
};

/// D_{n+1} sits in the relative commutant, is abelian, and equals its own
/// centralizer there (dimension and span).
MasaResult verify_masa(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                       std::size_t cap = kDefaultEnumerationCap);

/// Same checks against a caller-supplied candidate for D_{n+1}.
MasaResult verify_masa_with(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                            const std::vector<AlgebraElement>& candidate,
                            std::size_t cap = kDefaultEnumerationCap);

/// e_{ab} -> e_{aa} if a = b, else 0.
AlgebraElement expectation_P(const AlgebraElement& x);

struct ExpectationResult {
  VerificationItem item;
  std::size_t faithful_samples = 0;
};

/// P idempotent with range span C_n, module-linear over C_n, compatible
/// with embed, and faithful: P(y*y) = 0 only for y = 0 on `samples` random
/// y (diagonal of y*y read off the matrix realization).
ExpectationResult verify_expectation(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                                     std::size_t samples = 200, std::uint64_t seed = 0x5eed,
                                     std::size_t cap = kDefaultEnumerationCap);

struct FreeNormalizerCertificate {
  Generator element;
  bool square_zero = false;
  bool normalizes = false;  // g b g* and g* b g diagonal for every b in C_n

  bool ok() const { return square_zero && normalizes; }
};

struct KernelResult {
  VerificationItem item;
  std::vector<FreeNormalizerCertificate> certificates;
  std::size_t kernel_dim = 0;
};

/// Certifies every off-diagonal generator of B_n as a free normalizer of C_n
/// and checks that together they span ker P exactly.
KernelResult kernel_free_normalizers(const BratteliDiagram& d, const PointSet& s, std::size_t n,
                                     std::size_t cap = kDefaultEnumerationCap);

}  // namespace bratteli

#endif  // BRATTELI_DIAGONAL_HPP
