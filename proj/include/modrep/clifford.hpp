#pragma once

// Clifford theory for a normal subgroup N of G: inertia groups, conjugate
// orbits, restriction/induction decompositions, the correspondence between
// irreducibles of the inertia group and of G over a given sigma, Green's
// theorem for p-group quotients, and extension experiments.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modrep/brauer.hpp"
#include "modrep/structure.hpp"

namespace modrep {

/// Outcome of one verified statement.
struct Check {
  std::string clause;
  bool passed = false;
  std::string detail;
};

bool all_passed(const std::vector<Check>& checks);

/// Irreducibles of G and N over one common splitting field.
struct CliffordContext {
  GroupPtr g;
  GroupPtr n;
  std::uint32_t p = 0;
  MeataxeOptions opts;
  FieldPtr field;
  std::vector<Representation> irr_g;
  std::vector<Representation> irr_n;
};

/// Enumerates both sides and rebases them onto the compositum of their
/// splitting fields. Throws NotNormal.
CliffordContext make_clifford_context(const GroupPtr& g, const GroupPtr& n, std::uint32_t p,
                                      const MeataxeOptions& opts = {});

struct InertiaData {
  GroupPtr inertia;                      // I_G(sigma); the G or N object itself when equal
  CosetData n_in_g;                      // T: N-cosets in G
  CosetData i_in_g;                      // R: I-cosets in G
  std::vector<std::size_t> stabilizing;  // T-indices t with ^t sigma ~ sigma
  std::vector<Representation> orbit;     // ^r sigma for r in R
  std::size_t d = 1;                     // [I : N]
};

/// Stabilizer of sigma's isomorphism class under conjugation. Tests only
/// N-coset representatives unless `naive`, which tests every element.
InertiaData inertia_group(const Representation& sigma, const GroupPtr& g, bool naive = false,
                          const MeataxeOptions& opts = {});

struct ResIndRecord {
  InertiaData inertia;
  Representation induced;
  CompositionFactors res_ind;
  std::vector<std::size_t> orbit_multiplicity;  // per orbit member
  std::size_t end_dim = 0;
  std::vector<Check> checks;
};

/// Res Ind sigma against d copies of the orbit, and dim End(Ind sigma) = d.
ResIndRecord res_ind_decompose(const Representation& sigma, const GroupPtr& g, const MeataxeOptions& opts = {});

struct RestrictionRecord {
  std::vector<std::size_t> orbit_multiplicity;  // composition multiplicity per orbit member
  std::size_t ell = 0;                          // common multiplicity
  std::size_t socle_multiplicity = 0;           // dim Hom_N(sigma, Res theta)
  std::vector<Check> checks;
};

/// Factors Res theta and checks it is ell copies of the orbit of
/// inertia.orbit. Throws OrbitMismatch when factors fall outside the orbit.
RestrictionRecord clifford_restrict(const Representation& theta, const InertiaData& inertia,
                                    const MeataxeOptions& opts = {});

struct CorollaryRecord {
  bool induced_irreducible = false;
  bool inertia_is_n = false;
  std::vector<Check> checks;
};

/// Ind sigma irreducible iff I_G(sigma) = N, both sides computed
/// separately. Throws PaperCheckFailure on disagreement when `strict`.
CorollaryRecord induced_irreducibility_check(const Representation& sigma, const GroupPtr& g,
                                             const MeataxeOptions& opts = {}, bool strict = false);

struct CorrespondenceEntry {
  Representation phi;                 // irreducible of I over sigma
  std::size_t composition_multiplicity = 0;  // in Ind_N^I sigma
  std::size_t m = 0;                  // dim Hom_I(Ind_N^I sigma, phi)
  std::size_t ell_phi = 0;            // inertia index of phi
  std::size_t ell_induced = 0;        // inertia index of Ind_I^G phi
  Representation induced;             // Ind_I^G phi
  long theta_index = -1;              // matching entry of irr_g
};

struct CliffordReport {
  std::string sigma_label;
  std::size_t sigma_degree = 0;
  InertiaData inertia;
  std::vector<std::size_t> ghat;  // indices into irr_g with sigma below them
  std::vector<std::size_t> ghat_ell;
  std::vector<CorrespondenceEntry> correspondence;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

/// Full verification for one sigma (an element of ctx.irr_n or any
/// irreducible of N over ctx.field).
CliffordReport clifford_correspondence(const Representation& sigma, CliffordContext& ctx);

/// Conjugation orbit representatives among ctx.irr_n (first member of each
/// orbit in enumeration order).
std::vector<std::size_t> orbit_representatives(CliffordContext& ctx);

struct GreenRecord {
  Representation theta;
  Representation psi_bar;
  std::size_t index = 0;  // [G:N]
  std::vector<Check> checks;
  bool passed() const { return all_passed(checks); }
};

/// Ind Res theta = [G:N] (theta (x) psi-bar) and uniqueness of the
/// extension. Throws HypothesisViolation when G/N is not a p-group or p
/// does not divide |N|, and NotIrreducible when Res theta is reducible.
GreenRecord green_verify(const GroupPtr& g, const GroupPtr& n, const Representation& theta, std::uint32_t p,
                         const std::vector<Representation>& irr_g, const MeataxeOptions& opts = {});

enum class ExtensionCase { CyclicQuotient, CoprimeIndex };

struct ExtensionResult {
  std::optional<Representation> theta;
  std::string log;
};

/// Searches irr_g for theta with Res theta ~ sigma. Throws
/// HypothesisViolation when the case hypothesis or I_G(sigma) = G fails.
ExtensionResult extension_search(const Representation& sigma, const CliffordContext& ctx, ExtensionCase which);

bool is_p_group(std::size_t order, std::uint32_t p);
bool is_cyclic(const Group& g);

}  // namespace modrep
