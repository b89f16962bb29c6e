// padicsampler.hpp
// Independent verification oracle: a bounded recursive p-adic descent that
// decides solubility of y^m = f(x,z) for explicit integer-coefficient
// forms, Monte Carlo density estimation over uniform p-adic coefficients,
// and the real-place Monte Carlo for even m.
//
// The descent is exact: a Soluble or Insoluble verdict is a proof, and the
// budget only bounds how deep the recursion may strip valuations before
// giving up with Unknown.  This makes the sampler a trustworthy referee for
// the exact pipeline: the two share no code beyond residue tables.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locsol/ratfun.hpp"

namespace locsol {

using u64 = std::uint64_t;

// A binary form of degree d over Z_p with exact integer coefficients
// c[0..d] (f = sum c_i x^i z^{d-i}), to be decided at precision `budget`:
// the maximum total valuation the descent may strip along any branch.
struct PAdicForm {
  u64 p = 0;
  u64 m = 3;
  int d = 6;
  std::vector<Int> coeffs;  // size d + 1
  int budget = 40;
};

// A solubility certificate: a primitive projective point, stored modulo
// p^level, at which the improved Hensel criterion v(F) > 2 v(dF/dy) holds
// for F = y^m - f(x,z) (or the x/z-partial for a y = 0 witness).
struct PAdicWitness {
  Int x, y, z;  // reduced mod p^level; (x, z) primitive
  int level = 0;
};

enum class VerdictKind { Soluble, Insoluble, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<PAdicWitness> witness;  // present iff Soluble
  long unknown_branches = 0;            // budget-exhausted branches
};

// Decide Q_p-solubility of y^m = f(x,z).  Exact for Soluble/Insoluble;
// Unknown only when some branch exhausts the budget.  Requires p prime and,
// when p | m, gcd(p - 1, m) = 1 (covers p = 3, m = 3).
Verdict decide_solubility(const PAdicForm& f);

// Re-check a witness against the form: evaluates F and the relevant partial
// derivative at the witness point and verifies the Hensel inequality.
bool verify_witness(const PAdicForm& f, const PAdicWitness& w);

// Counter-based RNG (documented in the README): two rounds of the
// SplitMix64 finalizer over (seed, counter).  Identical (seed, counter)
// pairs produce identical streams on every platform.
u64 counter_rng(u64 seed, u64 counter);

// Monte Carlo estimate of rho(p) for y^m = f of degree d: `samples` forms
// with coefficients uniform mod p^budget (Haar up to events below the
// budget), decided independently.  Deterministic given the seed.
struct LocalEstimate {
  u64 p = 0;
  u64 samples = 0;
  u64 soluble = 0, insoluble = 0, unknown = 0;
  double soluble_fraction = 0, unknown_fraction = 0;
  double sigma = 0;  // binomial standard error of soluble_fraction
};
LocalEstimate estimate_rho_local(u64 p, u64 m, int d, u64 samples, u64 seed,
                                 int budget);

// As above, but conditioned: only forms accepted by `keep` (a predicate on
// the mod-p reduction digits) are counted, so strata with small mass can be
// measured directly.  Returns the conditional soluble fraction.
LocalEstimate estimate_rho_conditional(u64 p, u64 m, int d, u64 samples,
                                       u64 seed, int budget,
                                       bool (*keep)(const std::vector<u64>&));

// Real place: fraction of coefficient vectors uniform in [-1,1]^{d+1} whose
// form takes a positive value on P^1(R) (even m; odd m returns 1 exactly).
// Positivity is decided by sign of the leading/constant coefficient with a
// critical-point evaluation fallback (root tolerance 1e-12).
double estimate_rho_infinity(u64 m, int d, u64 samples, u64 seed);

}  // namespace locsol
