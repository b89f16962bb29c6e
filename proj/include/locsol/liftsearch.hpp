// liftsearch.hpp
// Symmetry-reduced exhaustive classification of binary forms mod p for
// y^m = f(x,z): the enumeration engine behind the per-prime solubility
// counts, the affine cubic/quartic censuses, and the exact sigma_1 values.
//
// Two interchangeable kernels exist: an OpenMP-parallel incremental-table
// kernel (the hot path) and a straightforward serial reference used as a
// correctness oracle in tests and benchmarks.

#pragma once

#include <map>
#include <vector>

#include "locsol/ffcore.hpp"
#include "locsol/ratfun.hpp"

namespace locsol {

// {0} plus representatives of F_p^x / (F_p^x)^m.  The enumeration weight of
// each nonzero representative is |(F_p^x)^m| = (p-1)/gcd(m, p-1).
std::vector<u64> leading_coset_reps(u64 p, u64 m);

// {0} plus representatives of F_p^x / (F_p^x)^d (the z -> az action on the
// constant coefficient); gcd(d, p-1) cosets.
std::vector<u64> constant_coset_reps(u64 p, int d);

// Tally of one enumeration stratum, in *expanded* (unreduced) form counts.
struct LiftTally {
  Int liftable{0};
  Int insoluble{0};
  Int zero_form{0};
  std::map<std::vector<int>, Int> multi_root;  // multiplicity profile -> n
  Int total{0};

  void add_weighted(const LiftTally& o, const Int& w);
  void subtract(const LiftTally& o);
  bool operator==(const LiftTally& o) const;
};

struct SearchReport {
  u64 p = 0;
  u64 c0 = 0;
  // "any": all sextics in this row.  "star": condition (*) holds (c6 not a
  // cube).  "abs_irred": y^3 - f absolutely irreducible (f != c h^3).
  LiftTally any, star, abs_irred, star_abs_irred;
  u64 symmetry_factor = 0;  // weight of a nonzero leading-coset rep

  void merge_weighted(const SearchReport& o, const Int& w);
};

// Exhaustive classification of the row of sextics (m = 3) whose constant
// coefficient, after the leading coefficient is scaled into its coset
// representative, equals c0 — equivalently the scaling-invariant ratio
// c0/c6 (or the constant coefficient itself when c6 = 0).  The p rows
// partition all p^7 sextics; expanded totals equal p^6 per row.  use_fast
// selects the incremental OpenMP kernel; the serial reference classifies
// each form independently.
SearchReport count_sextic_forms(u64 p, u64 c0, bool use_fast = true);

// Aggregate over all p rows via the z -> az cosets (the row label scales by
// a^6); expanded totals equal p^7.
SearchReport aggregate_sextic_forms(u64 p, bool use_fast = true);

// Closed forms used to weight multiple-root strata (all exact):
// alpha, beta solve the depth-recursion pair; nu is the double-root lifting
// probability; pi the triple-root one (p = 1 mod 3 only for pi).
Rat alpha_of(u64 p);
Rat beta_of(u64 p);
Rat nu_of(u64 p);     // p != 3
Rat pi_of(u64 p);     // p = 1 mod 3
Rat rho33aff_of(u64 p);  // p = 1 mod 3; enumeration-backed at p = 7

// Affine census of y^3 = cubic (v(c3) = 0): enumerated tallies plus the
// assembled rho_{3,3}^aff.
struct AffineCensus {
  LiftTally tally;
  Rat rho;  // assembled lifting probability
};
AffineCensus count_cubic_forms(u64 p);

// Affine census of y^3 = quartic; assembled rho_{3,4}^aff.  Returns rho = 1
// for p >= 31 per the curve-point bound (enumeration confirms at 31).
AffineCensus count_quartic_forms(u64 p);

// Exact (sigma_1, sigma_1^*) for p in {7,13,19,31,37,43} by weighting the
// multiple-root strata of the absolutely-irreducible sextic census with nu
// (double roots, independent) and pi (triple root).  Other primes return 1.
struct Sigma1Result {
  Rat sigma1;
  Rat sigma1_star;
  LiftTally abs_irred;       // aggregated, expanded counts
  LiftTally star_abs_irred;
};
Sigma1Result sigma1_from_census(u64 p, bool use_fast = true);

}  // namespace locsol
