#pragma once

// Named groups, group pairs and representation descriptors, and the batch
// verification driver used by the CLI and the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/clifford.hpp"
#include "modrep/sl2gl2.hpp"

namespace modrep {

/// Group descriptors: SL2, GL2, S3, S4, A4, V4, D8, C2, C3, C4, C3xS3, or
/// file:<path> (JSON {"p": p, "generators": [[[...]]]} or a bare list of
/// matrices). Permutation groups act on max(own degree, `degree`) points.
GroupPtr make_group(const std::string& desc, std::uint32_t p, std::size_t degree = 0);

struct GroupPair {
  GroupPtr g;
  GroupPtr n;
  std::uint32_t p = 0;
  std::string label;
};

/// N is built on G's points so it is a subgroup of G. Throws NotNormal.
GroupPair make_group_pair(const std::string& g_desc, const std::string& n_desc, std::uint32_t p);

struct SuiteSpec {
  std::string g;
  std::string n;
  std::uint32_t p;
};

/// (GL2,SL2,3), (GL2,SL2,5), (S4,A4,2), (A4,V4,2), (A4,V4,3), (D8,C4,2),
/// (C3xS3,S3,3).
const std::vector<SuiteSpec>& suite_pairs();

/// Representation descriptors: trivial, natural, polk:<k>, polkr:<k>:<r>,
/// irr:<i> (i-th entry of `irreducibles`), file:<path> (JSON
/// {"p","k","generators"} with integer or coefficient-list entries).
Representation make_representation(const std::string& desc, const GroupPtr& g, std::uint32_t p,
                                   bool allow_reducible = false,
                                   const std::vector<Representation>* irreducibles = nullptr);

struct PairVerification {
  GroupPair pair;
  CliffordContext ctx;
  std::vector<std::size_t> orbit_reps;   // indices into ctx.irr_n
  std::vector<CliffordReport> reports;   // one per entry of ctx.irr_n
  std::vector<Check> checks;             // pair-level checks
  std::vector<std::string> notes;
  bool passed() const;
};

/// Clifford reports for every irreducible of N, plus reciprocity, the
/// partition of G-hat over orbit representatives, and the induced
/// irreducibility criterion on every sigma.
PairVerification verify_pair(const SuiteSpec& spec, const MeataxeOptions& opts = {});

struct GreenVerification {
  std::vector<GreenRecord> records;  // one per irreducible sigma of N
  std::vector<std::string> sigma_labels;
  std::vector<Check> checks;
  bool passed() const { return all_passed(checks); }
};

/// Green's theorem on a pair whose quotient is a p-group, for every sigma
/// of N that extends to G.
GreenVerification verify_green(const SuiteSpec& spec, const MeataxeOptions& opts = {});

struct ExtensionLog {
  std::vector<std::string> lines;
  std::vector<bool> outcomes;  // one per line
  std::size_t attempted = 0;
  std::size_t found = 0;
};

/// Extension experiments on every suite sigma satisfying each hypothesis
/// set (cyclic quotient, coprime index), given its inertia group is G.
ExtensionLog run_extension_experiments(const MeataxeOptions& opts = {});

struct SuiteEntry {
  std::string name;
  std::vector<Check> checks;
  bool passed() const { return all_passed(checks); }
};

struct SuiteSummary {
  std::string suite;
  std::vector<SuiteEntry> entries;
  std::vector<std::string> notes;
  bool passed() const;
};

/// "paper": both tables, the polynomial family checks at p = 3 and 5, every
/// suite pair, Green's theorem and the extension experiments. "quick":
/// p = 3 only. Throws InvalidInput for any other name.
SuiteSummary run_suite(const std::string& which, const MeataxeOptions& opts = {});

}  // namespace modrep
