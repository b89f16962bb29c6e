// ffcore.hpp
// Exact arithmetic over F_p and form-level predicates: residue tables,
// evaluation, root multiplicities, factorization typing, and classification
// of Hensel liftability for binary forms y^m = f(x,z).
//
// Residues are 64-bit integers with explicit modular reduction; this layer
// never needs arbitrary precision (p < 2^20 covers every consumer).

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace locsol {

using u64 = std::uint64_t;

// Deterministic primality test for 64-bit inputs.
bool is_prime_u64(u64 n);

// Prime context: the nonzero m-th power residues mod p and the fraction
// Phi(p) = |residues| / p used by the rank/matrix lower bound.
struct PrimeCtx {
  u64 p = 0;
  u64 m = 0;
  int class3 = 0;  // p mod 3
  std::vector<u64> power_residues;    // sorted, nonzero m-th powers mod p
  std::vector<bool> is_power_residue; // size p, membership incl. [0] = false

  // Phi as an exact pair (|power_residues|, p).
  std::pair<u64, u64> phi_fraction() const {
    return {power_residues.size(), p};
  }
};

PrimeCtx make_prime_ctx(u64 p, u64 m);

// Nonzero cubic residues of the units mod 27: {1, 8, 10, 17, 19, 26}.
// The set is invariant under addition by multiples of 9.
std::vector<u64> cubic_residues_mod_27();
bool is_cubic_residue_mod_27(u64 a);

// Binary form f(x,z) = sum_{i=0}^{d} c_i x^i z^{d-i} over F_p.
struct BinaryFormFp {
  u64 p = 0;
  int d = 0;
  std::vector<u64> c;  // c[0..d], entries in [0, p)

  BinaryFormFp(u64 p_, int d_, std::vector<u64> coeffs);
  bool is_zero() const;
  // Value at the affine point [x : 1].
  u64 eval_affine(u64 x) const;
  // Value at [1 : 0], i.e. the leading coefficient c_d.
  u64 eval_infinity() const { return c[static_cast<size_t>(d)]; }
};

// A point of P^1(F_p): either [x : 1] or the point at infinity [1 : 0].
struct ProjPointFp {
  bool at_infinity = false;
  u64 x = 0;  // meaningful only when !at_infinity

  bool operator==(const ProjPointFp& o) const {
    return at_infinity == o.at_infinity && (at_infinity || x == o.x);
  }
  bool operator<(const ProjPointFp& o) const {
    if (at_infinity != o.at_infinity) return !at_infinity;  // affine first
    return !at_infinity && x < o.x;
  }
};

// Factorization type of a nonzero binary form: the multiset of
// (irreducible-factor degree, multiplicity) pairs, with repetitions for
// distinct factors sharing degree and multiplicity.  Canonical order is
// lexicographic by (degree, multiplicity).
struct FactorizationType {
  std::vector<std::pair<int, int>> parts;  // sorted (degree, multiplicity)

  int total_degree() const;
  bool has_linear_simple() const;  // some part (1, 1)
  std::string to_string() const;   // e.g. "(1 1 1^2 2)"
  bool operator==(const FactorizationType& o) const { return parts == o.parts; }
  bool operator<(const FactorizationType& o) const { return parts < o.parts; }
};

// All P^1(F_p) roots of f with exact multiplicities.  Throws on the zero form.
std::vector<std::pair<ProjPointFp, int>> roots_with_multiplicity(
    const BinaryFormFp& f);

// Full factorization type via root stripping plus distinct-degree splitting
// of the rootless residual (degree <= 6 needs gcds with x^{p^k} - x for
// k <= 3 only, but the implementation is uniform in k).  Throws on zero.
FactorizationType factorization_type(const BinaryFormFp& f);

// Liftability classification of y^m = f(x,z) over Q_p from the mod-p data.
struct Liftable {};
struct NoFpPoints {};
struct MultiRootOnly {
  std::vector<int> profile;  // multiplicities (>= 2) of the F_p roots, sorted
};
struct ZeroForm {};
using LiftClass = std::variant<Liftable, NoFpPoints, MultiRootOnly, ZeroForm>;

// For p not dividing m: Liftable iff some point has value a nonzero m-th
// power residue or is a simple root of f; NoFpPoints iff no point evaluates
// to 0 or a residue; MultiRootOnly otherwise (only multiple roots).
// For p | m with gcd(p-1, m) = 1: Liftable iff some point has a unit x- or
// z-partial derivative (the y-partial is identically 0 there).
// Rejects p | m with gcd(p-1, m) > 1.
LiftClass classify_liftability(const BinaryFormFp& f, const PrimeCtx& ctx);

bool is_liftable(const LiftClass& c);

// Genus of y^m = f from the branch-point formula
//   g = 1 + (m(|B| - 2) - sum_{alpha in B} gcd(m, r_alpha)) / 2,
// where mults are the P^1 root multiplicities of f (summing to d) and B is
// the subset with m not dividing the multiplicity.  The separable overload
// assumes m | d, where the formula collapses to (m-1)(d-2)/2.
long generic_genus(u64 m, int d, const std::vector<int>& mults);
long generic_genus_separable(u64 m, int d);

}  // namespace locsol
