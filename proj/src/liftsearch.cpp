#include "locsol/liftsearch.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace locsol {

namespace {

Rat eval_at(const char* expr, u64 p) {
  return parse_ratfun(expr).eval(Rat(static_cast<unsigned long>(p)));
}

// Representatives of F_p^x modulo the k-th powers: the first unassigned
// unit, scanning upward, until all gcd(k, p-1) cosets are covered.
std::vector<u64> unit_coset_reps(u64 p, u64 k) {
  u64 g = std::gcd(k, p - 1);
  std::vector<bool> covered(p, false);
  std::vector<u64> powers;
  for (u64 a = 1; a < p; ++a) {
    u64 r = 1;
    for (u64 i = 0; i < k; ++i) r = r * a % p;
    powers.push_back(r);
  }
  std::vector<u64> reps;
  for (u64 a = 1; a < p && reps.size() < g; ++a) {
    if (covered[a]) continue;
    reps.push_back(a);
    for (u64 s : powers) covered[s * a % p] = true;
  }
  return reps;
}

void classify_into(const LiftClass& cls, LiftTally& t) {
  if (std::holds_alternative<Liftable>(cls))
    t.liftable += 1;
  else if (std::holds_alternative<NoFpPoints>(cls))
    t.insoluble += 1;
  else if (std::holds_alternative<ZeroForm>(cls))
    t.zero_form += 1;
  else
    t.multi_root[std::get<MultiRootOnly>(cls).profile] += 1;
  t.total += 1;
}

}  // namespace

std::vector<u64> leading_coset_reps(u64 p, u64 m) {
  if (m % p == 0) throw std::invalid_argument("requires p not dividing m");
  std::vector<u64> reps = {0};
  for (u64 r : unit_coset_reps(p, m)) reps.push_back(r);
  return reps;
}

std::vector<u64> constant_coset_reps(u64 p, int d) {
  std::vector<u64> reps = {0};
  for (u64 r : unit_coset_reps(p, static_cast<u64>(d))) reps.push_back(r);
  return reps;
}

void LiftTally::add_weighted(const LiftTally& o, const Int& w) {
  liftable += o.liftable * w;
  insoluble += o.insoluble * w;
  zero_form += o.zero_form * w;
  for (auto& [profile, n] : o.multi_root) multi_root[profile] += n * w;
  total += o.total * w;
}

void LiftTally::subtract(const LiftTally& o) {
  liftable -= o.liftable;
  insoluble -= o.insoluble;
  zero_form -= o.zero_form;
  for (auto& [profile, n] : o.multi_root) {
    multi_root[profile] -= n;
    if (multi_root[profile] == 0) multi_root.erase(profile);
  }
  total -= o.total;
}

bool LiftTally::operator==(const LiftTally& o) const {
  return liftable == o.liftable && insoluble == o.insoluble &&
         zero_form == o.zero_form && multi_root == o.multi_root &&
         total == o.total;
}

void SearchReport::merge_weighted(const SearchReport& o, const Int& w) {
  any.add_weighted(o.any, w);
  star.add_weighted(o.star, w);
  abs_irred.add_weighted(o.abs_irred, w);
  star_abs_irred.add_weighted(o.star_abs_irred, w);
}

namespace {

// ---- sextic kernels -------------------------------------------------------

// Serial reference: classify every form of one (c0, c6) stratum directly.
LiftTally enumerate_stratum_serial(const PrimeCtx& ctx, u64 c0, u64 c6) {
  const u64 p = ctx.p;
  LiftTally t;
  u64 inner = 1;
  for (int i = 0; i < 5; ++i) inner *= p;
  std::vector<u64> c(7, 0);
  c[0] = c0;
  c[6] = c6;
  for (u64 code = 0; code < inner; ++code) {
    u64 v = code;
    for (int i = 1; i <= 5; ++i) {
      c[static_cast<size_t>(i)] = v % p;
      v /= p;
    }
    classify_into(classify_liftability(BinaryFormFp(p, 6, c), ctx), t);
  }
  return t;
}

// Incremental kernel: walk c1..c5 in odometer order, maintaining the value
// table f(x) for all x and counters of nonzero-cube and zero values, so the
// common cases (a cube value exists / no F_p point at all) are O(1).
LiftTally enumerate_stratum_fast(const PrimeCtx& ctx, u64 c0, u64 c6) {
  const u64 p = ctx.p;
  u64 inner = 1;
  for (int i = 0; i < 5; ++i) inner *= p;

  // A nonzero cube leading coefficient makes the point at infinity a simple
  // F_p point for every form in the stratum.
  if (c6 != 0 && ctx.is_power_residue[c6]) {
    LiftTally t;
    t.liftable = Int(static_cast<unsigned long>(inner));
    t.total = t.liftable;
    return t;
  }

  // addtab[j-1][x] = x^j mod p: the value change when digit c_j increments.
  std::array<std::vector<u64>, 5> addtab;
  for (int j = 1; j <= 5; ++j) {
    addtab[static_cast<size_t>(j - 1)].resize(p);
    for (u64 x = 0; x < p; ++x) {
      u64 r = 1;
      for (int i = 0; i < j; ++i) r = r * x % p;
      addtab[static_cast<size_t>(j - 1)][x] = r;
    }
  }

  std::vector<LiftTally> chunk(static_cast<size_t>(p));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long c5s = 0; c5s < static_cast<long long>(p); ++c5s) {
    const u64 c5 = static_cast<u64>(c5s);
    LiftTally t;
    std::vector<u64> value(p);
    long cnt_cube = 0, cnt_zero = 0;
    for (u64 x = 0; x < p; ++x) {
      u64 x5 = addtab[4][x];
      u64 v = (c6 % p * (x5 * x % p) + c5 * x5 + c0) % p;
      value[x] = v;
      if (v == 0)
        ++cnt_zero;
      else if (ctx.is_power_residue[v])
        ++cnt_cube;
    }
    std::array<u64, 4> digit{0, 0, 0, 0};  // current c1..c4
    const u64 steps = inner / p;           // p^4 forms in this chunk
    std::vector<u64> coeffs(7, 0);
    for (u64 step = 0;; ++step) {
      if (cnt_cube > 0) {
        t.liftable += 1;
        t.total += 1;
      } else if (cnt_zero == 0 && c6 != 0) {
        t.insoluble += 1;
        t.total += 1;
      } else {
        coeffs[0] = c0;
        for (int i = 1; i <= 4; ++i)
          coeffs[static_cast<size_t>(i)] = digit[static_cast<size_t>(i - 1)];
        coeffs[5] = c5;
        coeffs[6] = c6;
        classify_into(classify_liftability(BinaryFormFp(p, 6, coeffs), ctx),
                      t);
      }
      if (step + 1 == steps) break;
      // Advance the odometer: bump c1, carrying upward.  Each digit bump
      // adds x^j to every value; a carry has already wrapped the digit's
      // total contribution back to zero (p additions of x^j).
      for (int j = 1; j <= 4; ++j) {
        const auto& tab = addtab[static_cast<size_t>(j - 1)];
        for (u64 x = 1; x < p; ++x) {
          u64 ov = value[x];
          u64 nv = ov + tab[x];
          if (nv >= p) nv -= p;
          value[x] = nv;
          if (ov == 0)
            --cnt_zero;
          else if (ctx.is_power_residue[ov])
            --cnt_cube;
          if (nv == 0)
            ++cnt_zero;
          else if (ctx.is_power_residue[nv])
            ++cnt_cube;
        }
        u64& dj = digit[static_cast<size_t>(j - 1)];
        if (++dj < p) break;
        dj = 0;
      }
    }
    chunk[static_cast<size_t>(c5s)] = std::move(t);
  }

  LiftTally out;
  for (auto& t : chunk) out.add_weighted(t, 1);
  return out;
}

// ---- cube-power forms (y^3 - f reducible over the algebraic closure) ------

// Per-c0 tallies of the p^3 forms f = c h^3 (h a binary quadratic),
// split by whether c6 is a non-cube ("star" condition).
struct CubePowerTallies {
  std::vector<LiftTally> any;   // indexed by c0
  std::vector<LiftTally> star;  // c6 a non-cube
};

// Row label of a sextic form: the constant coefficient after scaling the
// leading coefficient to its coset representative — the scaling-invariant
// ratio c0 / c6, or c0 itself when c6 = 0.
u64 row_label(const std::array<u64, 7>& f, u64 p) {
  if (f[6] == 0) return f[0];
  u64 inv = 1;  // c6^(p-2) = c6^(-1)
  u64 base = f[6], e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return f[0] * inv % p;
}

const CubePowerTallies& cube_power_tallies(u64 p) {
  static std::map<u64, CubePowerTallies> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;

  PrimeCtx ctx = make_prime_ctx(p, 3);
  std::set<std::array<u64, 7>> seen;
  for (u64 c : unit_coset_reps(p, 3)) {
    for (u64 a = 0; a < p; ++a)
      for (u64 b = 0; b < p; ++b)
        for (u64 cc = 0; cc < p; ++cc) {
          if (a == 0 && b == 0 && cc == 0) continue;
          // h = a x^2 + b xz + cc z^2; f = c h^3, coefficients by x-degree.
          std::array<u64, 3> h{cc, b, a};
          std::array<u64, 7> f{};
          std::array<u64, 5> h2{};
          for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
              h2[static_cast<size_t>(i + j)] =
                  (h2[static_cast<size_t>(i + j)] +
                   h[static_cast<size_t>(i)] * h[static_cast<size_t>(j)]) %
                  p;
          for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 2; ++j)
              f[static_cast<size_t>(i + j)] =
                  (f[static_cast<size_t>(i + j)] +
                   h2[static_cast<size_t>(i)] * h[static_cast<size_t>(j)]) %
                  p;
          for (auto& v : f) v = v * c % p;
          seen.insert(f);
        }
  }
  Int expected = 1;
  for (int i = 0; i < 3; ++i) expected *= static_cast<unsigned long>(p);
  expected -= 1;
  if (Int(static_cast<unsigned long>(seen.size())) != expected)
    throw std::logic_error("cube-power form count mismatch");

  CubePowerTallies out;
  out.any.assign(p, LiftTally{});
  out.star.assign(p, LiftTally{});
  for (const auto& f : seen) {
    std::vector<u64> coeffs(f.begin(), f.end());
    LiftClass cls = classify_liftability(BinaryFormFp(p, 6, coeffs), ctx);
    u64 label = row_label(f, p);
    classify_into(cls, out.any[label]);
    if (f[6] != 0 && !ctx.is_power_residue[f[6]])
      classify_into(cls, out.star[label]);
  }
  // The zero form is c = 0 (or h = 0).
  out.any[0].zero_form += 1;
  out.any[0].total += 1;
  return cache.emplace(p, std::move(out)).first->second;
}

// ---- affine censuses ------------------------------------------------------

// Multiplicity of x0 as a root of the affine polynomial with the given
// coefficients (by x-degree).
int affine_root_multiplicity(std::vector<u64> c, u64 x0, u64 p) {
  int mult = 0;
  while (!c.empty()) {
    // Synthetic division by (x - x0); the final carry is the value at x0.
    u64 carry = 0;
    std::vector<u64> q(c.size() - 1);
    for (size_t i = c.size(); i-- > 0;) {
      u64 v = (carry * x0 + c[i]) % p;
      if (i == 0) {
        if (v != 0) return mult;
      } else {
        q[i - 1] = v;
      }
      carry = v;
    }
    ++mult;
    c = std::move(q);
  }
  return mult;
}

// Classify one affine equation y^3 = f(x) (f of degree <= 4, unit leading
// coefficient) by its mod-p data.
void classify_affine_into(const std::vector<u64>& coeffs, const PrimeCtx& ctx,
                          LiftTally& t) {
  const u64 p = ctx.p;
  std::vector<u64> roots;
  bool cube_value = false;
  for (u64 x = 0; x < p; ++x) {
    u64 v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = (v * x + coeffs[i]) % p;
    if (v == 0)
      roots.push_back(x);
    else if (ctx.is_power_residue[v])
      cube_value = true;
  }
  if (cube_value) {
    t.liftable += 1;
    t.total += 1;
    return;
  }
  std::vector<int> profile;
  bool simple = false;
  for (u64 r : roots) {
    int m = affine_root_multiplicity(coeffs, r, p);
    if (m == 1) simple = true;
    profile.push_back(m);
  }
  if (simple)
    t.liftable += 1;
  else if (roots.empty())
    t.insoluble += 1;
  else {
    std::sort(profile.begin(), profile.end());
    t.multi_root[profile] += 1;
  }
  t.total += 1;
}

Rat weighted_rho(const LiftTally& t,
                 const std::map<std::vector<int>, Rat>& weights,
                 const char* what) {
  Rat num(t.liftable);
  for (auto& [profile, n] : t.multi_root) {
    auto it = weights.find(profile);
    if (it == weights.end()) {
      std::string msg = std::string("unweighted multiplicity profile in ") +
                        what + ":";
      for (int m : profile) msg += " " + std::to_string(m);
      throw std::logic_error(msg);
    }
    num += Rat(n) * it->second;
  }
  Rat rho = num / Rat(t.total);
  rho.canonicalize();
  return rho;
}

void require_p_1_mod_3(u64 p, const char* what) {
  if (p % 3 != 1 || !is_prime_u64(p))
    throw std::invalid_argument(std::string(what) +
                                " requires a prime p = 1 mod 3");
}

}  // namespace

SearchReport count_sextic_forms(u64 p, u64 c0, bool use_fast) {
  if (!is_prime_u64(p) || p == 3)
    throw std::invalid_argument("requires a prime p != 3");
  PrimeCtx ctx = make_prime_ctx(p, 3);
  SearchReport r;
  r.p = p;
  r.c0 = c0;
  r.symmetry_factor = (p - 1) / std::gcd<u64>(3, p - 1);
  for (u64 rep : leading_coset_reps(p, 3)) {
    // Within a row, a nonzero leading representative pins the constant
    // coefficient to c0 * rep (the row label is the ratio c0/c6).
    u64 constant = rep == 0 ? c0 : c0 * rep % p;
    LiftTally t = use_fast ? enumerate_stratum_fast(ctx, constant, rep)
                           : enumerate_stratum_serial(ctx, constant, rep);
    Int w = rep == 0 ? Int(1)
                     : Int(static_cast<unsigned long>(r.symmetry_factor));
    r.any.add_weighted(t, w);
    if (rep != 0 && !ctx.is_power_residue[rep]) r.star.add_weighted(t, w);
  }
  const auto& cp = cube_power_tallies(p);
  r.abs_irred = r.any;
  r.abs_irred.subtract(cp.any[c0]);
  r.star_abs_irred = r.star;
  r.star_abs_irred.subtract(cp.star[c0]);
  return r;
}

SearchReport aggregate_sextic_forms(u64 p, bool use_fast) {
  SearchReport total;
  total.p = p;
  u64 g = std::gcd<u64>(6, p - 1);
  total.symmetry_factor = (p - 1) / g;
  for (u64 rep : constant_coset_reps(p, 6)) {
    SearchReport r = count_sextic_forms(p, rep, use_fast);
    Int w = rep == 0 ? Int(1)
                     : Int(static_cast<unsigned long>(total.symmetry_factor));
    total.merge_weighted(r, w);
  }
  return total;
}

Rat alpha_of(u64 p) {
  return eval_at("(p^3+p+1)/(p^4+p^3+p^2+p+1)", p);
}

Rat beta_of(u64 p) {
  return eval_at("p*(p^3+p^2+1)/(p^4+p^3+p^2+p+1)", p);
}

Rat nu_of(u64 p) {
  if (p == 3) return Rat(43, 243);
  if (p % 3 == 1) return eval_at("(3*p^4-p^3+p^2-3*p+6)/(6*p^5)", p);
  return eval_at("(p^4+p^3-p^2-p+2)/(2*p^5)", p);
}

Rat pi_of(u64 p) {
  require_p_1_mod_3(p, "pi");
  Rat r = Rat(1, static_cast<unsigned long>(p)) -
          Rat(1, static_cast<unsigned long>(p * p)) +
          Rat(1, static_cast<unsigned long>(p * p * p)) * rho33aff_of(p);
  r.canonicalize();
  return r;
}

Rat rho33aff_of(u64 p) {
  if (p == 3) return Rat(2103, 2183);
  require_p_1_mod_3(p, "rho33aff");
  if (p == 7) {
    static const Rat cached = count_cubic_forms(7).rho;
    return cached;
  }
  return eval_at("(3*p^4+3*p^3+p^2+3*p+1)/(3*(p^4+p^3+p^2+p+1))", p);
}

AffineCensus count_cubic_forms(u64 p) {
  require_p_1_mod_3(p, "cubic census");
  PrimeCtx ctx = make_prime_ctx(p, 3);
  AffineCensus out;
  Int w(static_cast<unsigned long>((p - 1) / 3));
  for (u64 c3 : unit_coset_reps(p, 3)) {
    LiftTally t;
    std::vector<u64> c(4);
    c[3] = c3;
    for (u64 code = 0; code < p * p * p; ++code) {
      u64 v = code;
      for (int i = 0; i < 3; ++i) {
        c[static_cast<size_t>(i)] = v % p;
        v /= p;
      }
      classify_affine_into(c, ctx, t);
    }
    out.tally.add_weighted(t, w);
  }
  out.rho = weighted_rho(out.tally, {{{3}, alpha_of(p)}}, "cubic census");
  return out;
}

AffineCensus count_quartic_forms(u64 p) {
  require_p_1_mod_3(p, "quartic census");
  if (p > 50) throw std::invalid_argument("quartic census limited to p <= 50");
  PrimeCtx ctx = make_prime_ctx(p, 3);
  AffineCensus out;
  Int w(static_cast<unsigned long>((p - 1) / 3));
  for (u64 c4 : unit_coset_reps(p, 3)) {
    LiftTally t;
    std::vector<u64> c(5);
    c[4] = c4;
    u64 inner = p * p * p * p;
    for (u64 code = 0; code < inner; ++code) {
      u64 v = code;
      for (int i = 0; i < 4; ++i) {
        c[static_cast<size_t>(i)] = v % p;
        v /= p;
      }
      classify_affine_into(c, ctx, t);
    }
    out.tally.add_weighted(t, w);
  }
  Rat nu = nu_of(p);
  Rat two_doubles = 1 - (1 - nu) * (1 - nu);
  two_doubles.canonicalize();
  out.rho = weighted_rho(out.tally, {{{2}, nu}, {{2, 2}, two_doubles}},
                         "quartic census");
  return out;
}

Sigma1Result sigma1_from_census(u64 p, bool use_fast) {
  Sigma1Result out;
  if (p != 7 && p != 13 && p != 19 && p != 31 && p != 37 && p != 43) {
    out.sigma1 = 1;
    out.sigma1_star = 1;
    return out;
  }
  SearchReport agg = aggregate_sextic_forms(p, use_fast);
  out.abs_irred = agg.abs_irred;
  out.star_abs_irred = agg.star_abs_irred;
  if (out.abs_irred.zero_form != 0)
    throw std::logic_error("zero form survived the cube-power subtraction");

  Rat nu = nu_of(p);
  Rat one_minus = 1 - nu;
  std::map<std::vector<int>, Rat> weights;
  weights[{2}] = nu;
  Rat d2 = 1 - one_minus * one_minus;
  d2.canonicalize();
  weights[{2, 2}] = d2;
  Rat d3 = 1 - one_minus * one_minus * one_minus;
  d3.canonicalize();
  weights[{2, 2, 2}] = d3;
  weights[{3}] = pi_of(p);
  out.sigma1 = weighted_rho(out.abs_irred, weights, "sigma1");
  out.sigma1_star = weighted_rho(out.star_abs_irred, weights, "sigma1*");
  return out;
}

}  // namespace locsol
