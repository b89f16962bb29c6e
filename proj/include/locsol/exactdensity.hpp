// exactdensity.hpp
// Exact local solubility densities for y^3 = f(x,z) with deg f = 6.
//
// Every intermediate lifting probability (the xi/alpha/nu/mu/tau/theta/
// lambda/sigma family) is built as an exact rational function of p, one
// solution per congruence class of p mod 3.  Exceptional small primes
// (2, 3, and the primes 7..43 congruent to 1 mod 3) run the same pipeline
// with enumeration-backed inputs substituted for the generic ones.  The
// product over all primes is assembled with a rigorous tail interval.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locsol/ratfun.hpp"

namespace locsol {

using u64 = std::uint64_t;

// How a prime is routed through the pipeline.  SmallPrime covers p = 2 and
// the exceptional p = 1 mod 3 primes {7, 13, 19, 31, 37, 43}; P3 is its own
// path (solubility at 3 depends on residues mod 27).  Every other prime
// evaluates the generic solution of its residue class.
enum class CongClass { OneMod3, TwoMod3, P3, SmallPrime };
CongClass classify_prime(u64 p);

// Densities of the factorization type of y^3 - f over F_p (deg-6 in y, x, z).
// xi1: absolutely irreducible; xi2/xi3/xi4: the reducible non-degenerate
// classes; xi5: totally degenerate.  The starred pair conditions on the
// leading coefficient being a non-cube.
struct XiTable {
  RatFun xi1, xi2, xi3, xi4, xi5;
  RatFun xi1_star, xi4_star;  // OneMod3 only (zero otherwise)
};
XiTable xi_table(CongClass cls);  // OneMod3 / TwoMod3 symbolic; P3 constants

// Depth-recursion lifting probabilities.  alpha/beta exist only for
// p = 1 mod 3 (for p = 2 mod 3 every unit is a cube and the corresponding
// events are certain); the primed and double-primed variants exist for all
// classes.
struct BaseQuantities {
  std::optional<RatFun> alpha, beta;  // OneMod3 only
  RatFun alpha_prime, beta_prime;
  RatFun alpha_dprime, beta_dprime;
};
BaseQuantities base_quantities(CongClass cls);

// Double-root (nu) and triple-root (pi) lifting probabilities.  pi exists
// only for p = 1 mod 3; nu at p = 3 is the constant 43/243.
struct NuPi {
  RatFun nu;
  std::optional<RatFun> pi;
};
NuPi nu_pi(CongClass cls);

// Solubility probabilities for forms divisible by p: tau_i (theta_i) is the
// probability of solubility when f / p (f / p^2) has root-structure class i
// mod p, indexed by the degree-6 census rows.  mu / mu_prime are the
// quartic-double-root analogues; sigma5_prime / sigma5_dprime condition on
// the leading coefficient having valuation exactly 1 / exactly 2.
struct TauTheta {
  std::array<RatFun, 10> tau, theta;
  RatFun mu, mu_prime;
  RatFun sigma5_prime, sigma5_dprime;
};
TauTheta tau_theta_pipeline(CongClass cls);  // OneMod3 or TwoMod3

// Joint solution of the double-root system (OneMod3 only): lambda is the
// deep double-root lifting probability, rho_star the solubility under the
// non-cube-leading-coefficient condition, and sigma4 / sigma4_star the
// class-4 conditional solubilities.
struct Sigma4System {
  RatFun lambda, rho_star, sigma4, sigma4_star;
};
Sigma4System sigma4_system(CongClass cls);

// Everything the pipeline produces for one congruence class.
struct DensitySolution {
  CongClass cls;
  XiTable xi;
  BaseQuantities base;
  NuPi nupi;
  TauTheta tt;
  std::optional<Sigma4System> s4;  // OneMod3 only
  RatFun sigma5;
  RatFun rho;
};

// Cached generic solution, valid for p > 43 (OneMod3) / p > 3 (TwoMod3).
const DensitySolution& generic_solution(CongClass cls);

// Cached solution of the exceptional pipeline at p in {2,3,7,...,43}; every
// field holds a constant rational function.
const DensitySolution& exceptional_solution(u64 p);

struct DensityReport {
  u64 p = 0;
  CongClass cls = CongClass::OneMod3;
  Rat rho;
  std::string decimal;  // 50 fractional digits, truncated
  // (quantity, source) pairs describing where each input came from.
  std::vector<std::pair<std::string, std::string>> provenance;
};

// Exceptional pipeline for p in {2, 3, 7, 13, 19, 31, 37, 43}.  For p = 7
// and 13 the sigma_1 inputs are enumerated live; for 19..43 stored census
// results are used (re-enumerable via the verification tool).  Throws for
// other primes.
DensityReport rho_small_prime(u64 p);

// rho(p) for any prime: dispatches to the exceptional pipeline or evaluates
// the generic class solution.
DensityReport rho_local(u64 p);

// Exact sigma_1(p): 1 except at the exceptional primes.
Rat sigma1_exact(u64 p);

// Product of rho(p) over primes p <= cutoff, with a rigorous interval for
// the tail over p > cutoff (the place at infinity contributes 1: every real
// number has a real cube root).  Requires cutoff >= 43 so that all
// exceptional primes are inside the exact part.
struct AdelicResult {
  u64 cutoff = 0;
  size_t primes_used = 0;
  Rat partial;      // exact product over p <= cutoff
  Rat tail_lower;   // proven lower bound for the product over p > cutoff
  Rat lower, upper; // partial * tail_lower, partial * 1
  std::string decimal;  // decimal expansion of the partial product
};
AdelicResult adelic_density(u64 cutoff);

}  // namespace locsol
