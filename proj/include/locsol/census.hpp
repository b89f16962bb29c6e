// census.hpp
// Exact counts and proportions of binary forms over F_p by factorization
// type, for degrees 2..6: closed-form count polynomials, a brute-force
// oracle, and the derived eta proportions.  Everything here is exact big
// integer / big rational arithmetic; no floating point.

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "locsol/ffcore.hpp"
#include "locsol/ratfun.hpp"

namespace locsol {

// Row labels of the per-degree type tables.  Row 0 is always "no roots",
// row 1 is "(1*)" (some simple root); the remaining rows are the
// multiple-root-only classes.  For d = 6, row 2 deliberately merges
// "(1^2 4)" with "(1^2 2 2)" to match the tabulated count; the split is
// available from the brute-force census only.
const std::vector<std::string>& census_row_labels(int d);

// Index of the table row a factorization type belongs to.
int census_row_of_type(int d, const FactorizationType& type);

struct CensusTable {
  int d = 0;
  u64 p = 0;
  bool monic = false;
  std::vector<Int> counts;           // indexed by table row
  std::map<std::string, Int> split;  // full type string -> count

  Int total() const;
};

// Tabulated count polynomial N_{d,i} (up to scaling) or N'_{d,i} (monic)
// evaluated at p.  Throws on an out-of-table (d, row).
Int count_by_type_formula(int d, int row, u64 p, bool monic);

// Exhaustive tally via factorization_type.  Monic forms are the p^d forms
// with c_d = 1; the up-to-scaling classes are canonicalized as z^k times a
// monic degree-(d-k) form, giving sum_{j=0..d} p^j representatives.
// Refuses p^d > 10^9.
CensusTable census_bruteforce(int d, u64 p, bool monic);

// eta_{d,i} = N_{d,i} / sum_j p^j (up to scaling) or N'_{d,i} / p^d (monic),
// in lowest terms.
Rat eta(int d, int row, u64 p, bool monic);

// The count polynomial itself, as a rational function of the symbol p.
RatFun count_formula_ratfun(int d, int row, bool monic);

// eta as a rational function of the symbol p (same congruence-free rows).
RatFun eta_ratfun(int d, int row, bool monic);

// Number of monic irreducible polynomials of degree d over F_p:
// (1/d) sum_{e | d} mu(d/e) p^e.
Int count_irreducible(int d, u64 p);

// CSV export: columns d,type,monic,p,count,eta_num,eta_den.
void write_census_csv(std::ostream& os, const CensusTable& table);

}  // namespace locsol
