#pragma once

// Hom-spaces, Meataxe irreducibility testing and composition factors.

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/rep.hpp"

namespace modrep {

struct MeataxeOptions {
  std::uint64_t seed = 1;
  int budget = 200;    // random algebra elements tried before giving up
  int max_word = 8;    // word length cap for algebra elements
};

struct HomSpace {
  Representation src;
  Representation dst;
  std::vector<Matrix> basis;  // deg(dst) x deg(src) intertwiners

  std::size_t dim() const noexcept { return basis.size(); }
};

/// All T with T src(g) = dst(g) T, as the canonical kernel basis of the
/// stacked linear system.
HomSpace hom_space(const Representation& src, const Representation& dst);
std::size_t hom_dim(const Representation& src, const Representation& dst);

struct IrreducibilityResult {
  bool irreducible = false;
  /// Proper invariant subspace (rows, RREF) when reducible.
  Matrix invariant_subspace;
  /// Attempt index and factor degree that produced the verdict.
  int attempt = -1;
  int factor_degree = 0;
  /// Which side of Norton's test produced the witness ("spin", "dual-spin")
  /// or "norton" for an irreducibility certificate.
  std::string certificate;
};

IrreducibilityResult is_irreducible(const Representation& rho, const MeataxeOptions& opts = {});
bool is_absolutely_irreducible(const Representation& rho, const MeataxeOptions& opts = {});

/// Invariant subspace spanned by `vectors` under the representation
/// (column action) or its transpose (row action).
Matrix spin(const Representation& rho, const std::vector<std::vector<Elem>>& vectors, bool transpose = false);

struct CompositionFactors {
  std::vector<std::pair<Representation, std::size_t>> factors;
  std::size_t total_degree = 0;

  std::size_t multiplicity_of(const Representation& irreducible) const;
  std::size_t distinct() const noexcept { return factors.size(); }
  std::size_t count() const;
};

/// Recursive Meataxe split; factors grouped up to isomorphism and ordered by
/// (degree, Brauer character key).
CompositionFactors composition_factors(const Representation& rho, const MeataxeOptions& opts = {});

/// Isomorphism of two irreducible representations (hom-space is nonzero).
bool isomorphic_irreducibles(const Representation& a, const Representation& b);
/// Isomorphism of arbitrary modules of equal degree: some intertwiner is
/// invertible. Tries the Hom basis and random combinations.
bool isomorphic(const Representation& a, const Representation& b, std::uint64_t seed = 1);

/// dim Hom(sigma, M) for absolutely irreducible sigma and semisimple M.
std::size_t multiplicity_in_semisimple(const Representation& sigma, const Representation& m,
                                       const MeataxeOptions& opts = {});

struct SplittingField {
  FieldPtr field;
  std::vector<Representation> reps;
};

/// Smallest k in {1,2,3,4,6,8,12} (compatible with the inputs' fields and
/// within the field bound) over which every composition factor of every
/// input has a one-dimensional endomorphism ring.
SplittingField ensure_splitting_field(const std::vector<Representation>& reps, const MeataxeOptions& opts = {},
                                      std::uint64_t field_bound = kDefaultFieldBound);
/// F_{p^k} using the stored Conway polynomial or, beyond the table, a
/// searched one.
FieldPtr ladder_field(std::uint32_t p, unsigned k, std::uint64_t field_bound = kDefaultFieldBound);

}  // namespace modrep
