#pragma once

// Brauer characters, irreducible enumeration by tensor closure, and Brauer
// character tables.

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/cyclotomic.hpp"
#include "modrep/rep.hpp"
#include "modrep/structure.hpp"

namespace modrep {

/// Lifting convention: with K the smallest admissible extension degree,
/// primitive(F_{p^K})^e is sent to exp(2 pi i e / (p^K - 1)). Conway moduli
/// make this independent of K.
inline constexpr const char* kLiftConvention =
    "Conway primitive element of GF(p^K) -> exp(2*pi*i/(p^K-1))";

struct BrauerCharacter {
  std::string label;
  std::size_t degree = 0;
  std::uint64_t conductor = 1;         // lcm of p-regular element orders
  std::vector<std::size_t> classes;    // p-regular class indices of the group
  std::vector<CyclotomicInt> values;   // one per entry of `classes`

  friend bool operator==(const BrauerCharacter& a, const BrauerCharacter& b) {
    return a.degree == b.degree && a.classes == b.classes && a.values == b.values;
  }
};

/// Conductor of the p-regular part of the group.
std::uint64_t brauer_conductor(const Group& g, std::uint32_t p);

/// Eigenvalues of A (A^m = I, p not dividing m) lifted to m-th roots of
/// unity in Z[zeta_m], with multiplicity. A must be over a field containing
/// the m-th roots of unity. Throws NotSemisimple if eigenspaces fall short.
std::vector<CyclotomicInt> lift_eigenvalues(const Matrix& a, std::uint64_t m);

/// Values on the p-regular classes, p being the characteristic of the
/// representation's field.
BrauerCharacter brauer_character(const Representation& rho);

/// Canonical key; within a fixed degree, larger values sort first.
std::string character_key(const BrauerCharacter& chi);

/// Irreducible representations of G over a splitting field, one per
/// isomorphism class, found among composition factors of tensor powers of
/// `faithful`. Ordered by (degree, character key).
std::vector<Representation> enumerate_irreducibles(const GroupPtr& g, std::uint32_t p,
                                                   const Representation& faithful,
                                                   const MeataxeOptions& opts = {});
/// Same with the natural representation over F_p as the faithful module.
std::vector<Representation> enumerate_irreducibles(const GroupPtr& g, std::uint32_t p,
                                                   const MeataxeOptions& opts = {});

struct BrauerTable {
  GroupPtr group;
  std::uint32_t p = 0;
  std::uint64_t conductor = 1;
  std::vector<std::size_t> classes;        // p-regular class indices
  std::vector<std::string> class_names;
  std::vector<std::uint64_t> orders;
  std::vector<std::size_t> sizes;
  std::vector<Representation> irreducibles;
  std::vector<BrauerCharacter> rows;
  std::string convention = kLiftConvention;
};

BrauerTable brauer_table(const GroupPtr& g, std::uint32_t p, const MeataxeOptions& opts = {});

/// Display names for every conjugacy class. 2x2 groups over F_p use
/// "I2", "-I2", "c3(a,b)" (split semisimple), "c4(w^e)" (eigenvalues w^e and
/// its Frobenius conjugate, w the Conway primitive element of GF(p^2)),
/// scalar "aI2" and "u(a)" for non-semisimple classes; other groups use
/// "<order><letter>".
std::vector<std::string> class_names(const Group& g);

}  // namespace modrep
