#pragma once

// Homogeneous-polynomial representations of SL2(F_p) and GL2(F_p), the
// verification of their classification, and the two small character
// tables for p = 3.

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/brauer.hpp"
#include "modrep/clifford.hpp"

namespace modrep {

/// Pol_k: homogeneous degree-k polynomials in x, y with basis
/// x^k, x^(k-1) y, ..., y^k and g = [[a,b],[c,d]] acting by
/// P(x,y) -> P(ax+cy, bx+dy). Requires 0 <= k <= p-1 unless
/// `allow_reducible`.
Representation pol_k(std::uint32_t p, unsigned k, bool allow_reducible = false);
/// Pol_k twisted by det^r on GL2(F_p), 0 <= r <= p-2.
Representation pol_k_r(std::uint32_t p, unsigned k, unsigned r, bool allow_reducible = false);
/// The substitution matrix of a 2x2 matrix on degree-k forms.
Matrix substitution_matrix(const Matrix& g, unsigned k);

struct Section2Report {
  std::uint32_t p = 0;
  std::vector<Check> checks;
  bool passed() const { return all_passed(checks); }
};

/// Irreducibility, distinctness and completeness of the Pol_k and Pol_k(r)
/// families, inertia groups, and the restriction/induction identities.
Section2Report verify_section2(std::uint32_t p, const MeataxeOptions& opts = {});

/// Row labels for tables of SL2(p) ("sigma_k") and GL2(p) ("theta_k,r"),
/// found by matching Brauer characters with Pol_k and Pol_k(r). Rows with
/// no match keep their label.
std::vector<std::string> polynomial_row_labels(const BrauerTable& t);

struct CellDiff {
  std::string row;
  std::string column;
  std::string expected;
  std::string actual;
};

struct TableComparison {
  std::string title;
  bool matches = false;
  bool galois_twist = false;  // matched only after swapping Galois-conjugate rows
  std::vector<std::string> columns;  // paper names in paper order
  std::vector<std::string> mapped;   // our class names for those columns
  std::vector<CellDiff> diffs;
  std::vector<std::string> notes;
};

/// Compares a computed table of SL2(3) (`which` = 1) or GL2(3) (`which` = 2)
/// with the published values.
TableComparison compare_with_paper(const BrauerTable& t, int which);

struct PaperTables {
  BrauerTable table1;
  BrauerTable table2;
  TableComparison cmp1;
  TableComparison cmp2;
  std::vector<std::string> induction_lines;
  bool induction_ok = false;
  bool passed() const { return cmp1.matches && cmp2.matches && induction_ok; }
};

/// Both tables, their comparison, and Ind sigma_k = theta_k,0 + theta_k,1.
PaperTables emit_paper_tables(const MeataxeOptions& opts = {});

/// Expected values, paper column order, as CyclotomicInt.
std::vector<std::vector<CyclotomicInt>> expected_table(int which);

}  // namespace modrep
