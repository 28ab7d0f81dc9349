#pragma once

// Serialization of tables, Clifford reports and suite summaries. Output is
// a pure function of the inputs and the RunConfig: no timestamps, keys in
// fixed order.

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/suite.hpp"

namespace modrep {

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t field_bound = kDefaultFieldBound;
  int budget = 200;
  std::string suite;
  std::string format = "text";
  std::string out;

  MeataxeOptions meataxe() const {
    MeataxeOptions o;
    o.seed = seed;
    o.budget = budget;
    return o;
  }
};

/// Conventions that fix every choice a second implementation would need to
/// reproduce our output, as "name: value" lines.
std::vector<std::pair<std::string, std::string>> conventions();

std::string table_json(const BrauerTable& t, const std::vector<std::string>& row_labels, const RunConfig& cfg,
                       const TableComparison* cmp = nullptr);
/// Class names, then an order row and a class-size row, then one row per
/// irreducible.
std::string table_text(const BrauerTable& t, const std::vector<std::string>& row_labels);
std::string table_csv(const BrauerTable& t, const std::vector<std::string>& row_labels);
std::string comparison_text(const TableComparison& c);

std::string clifford_json(const CliffordContext& ctx, const std::vector<CliffordReport>& reports,
                          const RunConfig& cfg);
std::string clifford_text(const CliffordContext& ctx, const std::vector<CliffordReport>& reports);

std::string summary_json(const SuiteSummary& s, const RunConfig& cfg);
std::string summary_text(const SuiteSummary& s);

/// Plain list of checks, one "PASS|FAIL clause  detail" line each.
std::string checks_text(const std::vector<Check>& checks);

}  // namespace modrep
