// padicsampler.cpp
// Bounded-depth exact p-adic descent for y^m = f(x, z), plus Monte Carlo
// density estimation at finite and real places.  See padicsampler.hpp for
// the contract; the descent below is self-contained so it can serve as an
// independent cross-check of the exact density pipeline.

#include "locsol/padicsampler.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "locsol/ffcore.hpp"

namespace locsol {

namespace {

Int pow_int(u64 p, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
  return r;
}

// Evaluate a univariate integer polynomial by Horner's rule.
Int eval_poly(const std::vector<Int>& h, const Int& t) {
  Int v = 0;
  for (auto it = h.rbegin(); it != h.rend(); ++it) v = v * t + *it;
  return v;
}

// p-adic valuation, capped at `cap` (returns cap for v >= cap, incl. n = 0).
int val_capped(const Int& n, u64 p, int cap) {
  if (n == 0) return cap;
  Int q = n, r;
  int v = 0;
  while (v < cap) {
    Int nq;
    r = q % Int(p);
    if (r != 0) break;
    mpz_divexact_ui(nq.get_mpz_t(), q.get_mpz_t(), p);
    q = nq;
    ++v;
  }
  return v;
}

struct DescentCtx {
  u64 p;
  u64 m;
  PrimeCtx pc;       // m-th power residues mod p (for p not dividing m)
  bool wild;         // p == 3, m == 3: residue class needs mod-27 data
  bool all_units_mth;  // every unit is an m-th power (e.g. p = 2, m = 3)
  long unknown_branches = 0;
};

// Terminal data from which a witness is rebuilt against the original form.
struct Terminal {
  Int coord;     // affine coordinate on the active chart
  bool root;     // true: y = 0 witness (coord is a root to refine)
  int depth;     // total valuation stripped on this branch
  int root_mod;  // for root terminals: coord is a simple root of h at this
                 // descent level; refinement happens on the original form
};

// Decide solubility of y^m = p^R h(t) over t in Z_p, where h has unit
// content and `transform` maps t back to the chart coordinate:
// coord = a + p^e t.  `rem` is the remaining stripping budget.
// Coefficients of h are kept reduced mod p^(rem + 5); that modulus is
// large enough to settle every residue test and every content computation
// the remaining budget allows.
VerdictKind decide_rec(DescentCtx& ctx, const std::vector<Int>& h, int R,
                       int rem, const Int& a, int e,
                       std::optional<Terminal>& term) {
  const u64 p = ctx.p;
  bool any_unknown = false;
  for (u64 t0 = 0; t0 < p; ++t0) {
    Int v0 = eval_poly(h, Int(t0));
    Int u = v0 % Int(p);
    if (u < 0) u += p;
    if (u != 0) {
      if (R % static_cast<int>(ctx.m) != 0) continue;  // valuation is fixed
      if (ctx.wild) {
        // Cube status of a 3-adic unit is decided mod 27; scan the disc.
        for (u64 s = 0; s < 9; ++s) {
          Int w = eval_poly(h, Int(t0 + 3 * s)) % 27;
          if (w < 0) w += 27;
          if (is_cubic_residue_mod_27(w.get_ui())) {
            term = Terminal{a + pow_int(p, e) * Int(t0 + 3 * s), false, R, 0};
            return VerdictKind::Soluble;
          }
        }
      } else if (ctx.all_units_mth ||
                 ctx.pc.is_power_residue[u.get_ui()]) {
        term = Terminal{a + pow_int(p, e) * Int(t0), false, R, 0};
        return VerdictKind::Soluble;
      }
      continue;
    }
    // p divides h(t0).  A simple root gives an exact zero of h, hence a
    // y = 0 point; otherwise descend into the disc t0 + p Z_p.
    Int d1 = 0;
    for (size_t i = h.size(); i-- > 1;)
      d1 = d1 * t0 + Int(static_cast<unsigned long>(i)) * h[i];
    Int du = d1 % Int(p);
    if (du != 0) {
      term = Terminal{a + pow_int(p, e) * Int(t0), true, R, e};
      return VerdictKind::Soluble;
    }
    if (rem <= 0) {
      any_unknown = true;
      ++ctx.unknown_branches;
      continue;
    }
    // Substitute t = t0 + p s: new coeff_k = p^k * h^(k)(t0) / k!.
    const int deg = static_cast<int>(h.size()) - 1;
    std::vector<Int> g(h.size());
    {
      // Taylor shift by t0 (synthetic division), then scale by p^k.
      std::vector<Int> sh = h;
      for (int i = 0; i <= deg; ++i)
        for (int j = deg - 1; j >= i; --j) sh[j] += Int(t0) * sh[j + 1];
      Int pk = 1;
      for (int k = 0; k <= deg; ++k, pk *= p) g[k] = sh[k] * pk;
    }
    int c = rem + 5;
    for (const Int& gi : g) c = std::min(c, val_capped(gi, p, rem + 5));
    if (c > rem) {
      any_unknown = true;
      ++ctx.unknown_branches;
      continue;
    }
    Int pc_div = pow_int(p, c), mod = pow_int(p, rem - c + 5);
    for (Int& gi : g) {
      Int q;
      mpz_divexact(q.get_mpz_t(), gi.get_mpz_t(), pc_div.get_mpz_t());
      gi = q % mod;
      if (gi < 0) gi += mod;
    }
    VerdictKind sub = decide_rec(ctx, g, R + c, rem - c,
                                 a + pow_int(p, e) * Int(t0), e + 1, term);
    if (sub == VerdictKind::Soluble) return VerdictKind::Soluble;
    if (sub == VerdictKind::Unknown) any_unknown = true;
  }
  return any_unknown ? VerdictKind::Unknown : VerdictKind::Insoluble;
}

// Digit-by-digit Hensel lift of an m-th root: given the value `u` (a unit
// mod p^L) known to be an m-th power, return y with y^m = u mod p^L.
// Starts from a residue search (mod 27 when p = m = 3, mod p otherwise).
Int lift_mth_root(u64 p, u64 m, const Int& u, int L) {
  int k0 = (p == 3 && m == 3) ? 3 : 1;
  Int base = pow_int(p, k0);
  Int y = -1;
  for (Int y0 = 0; y0 < base; ++y0) {
    Int t;
    mpz_powm_ui(t.get_mpz_t(), y0.get_mpz_t(), m, base.get_mpz_t());
    if (t == u % base) {
      y = y0;
      break;
    }
  }
  if (y < 0) throw std::logic_error("lift_mth_root: no residue solution");
  // Position of the digit that moves y^m by one step of p^(k+1): when
  // p | m the derivative m y^(m-1) carries an extra factor of p, so the
  // digit sits one place lower (valid for k >= 3, guaranteed by k0 = 3).
  const int shift = (m % p == 0) ? 1 : 0;
  for (int k = k0; k < L; ++k) {
    Int mk1 = pow_int(p, k + 1), pk = pow_int(p, k - shift);
    bool found = false;
    for (u64 c = 0; c < p; ++c) {
      Int cand = y + Int(c) * pk;
      Int t;
      mpz_powm_ui(t.get_mpz_t(), cand.get_mpz_t(), m, mk1.get_mpz_t());
      if (t == u % mk1) {
        y = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("lift_mth_root: lift failed");
  }
  return y;
}

// Refine a simple-root terminal.  The terminal sits at chart coordinate
// x = a + p^e t0 with depth R, meaning h(t) = p^-R g(a + p^e t) is an
// integer polynomial with h(t0) = 0 mod p and h'(t0) a unit.  Rebuild h
// exactly from the chart polynomial g, Hensel-lift the root to precision
// p^J, and map back; then v(g(x)) = R + J while v(g'(x)) = R - e stays
// fixed, so the Hensel inequality holds with a wide margin.
Int hensel_root(const std::vector<Int>& g, u64 p, const Int& a, int e, int R,
                const Int& t0, int J) {
  const int deg = static_cast<int>(g.size()) - 1;
  std::vector<Int> h = g;
  for (int i = 0; i <= deg; ++i)
    for (int j = deg - 1; j >= i; --j) h[j] += a * h[j + 1];
  Int pe = pow_int(p, e), pk = 1;
  for (int k = 0; k <= deg; ++k, pk *= pe) h[k] *= pk;
  Int pr = pow_int(p, R);
  for (Int& c : h) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pr.get_mpz_t());
    c = q;
  }
  Int t = t0;
  for (int j = 1; j < J; ++j) {
    Int mod = pow_int(p, j + 1), pj = pow_int(p, j);
    if (eval_poly(h, t) % mod == 0) continue;
    bool found = false;
    for (u64 c = 1; c < p && !found; ++c) {
      Int cand = t + Int(c) * pj;
      if (eval_poly(h, cand) % mod == 0) {
        t = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("hensel_root: lift failed");
  }
  return a + pe * t;
}

}  // namespace

bool verify_witness(const PAdicForm& f, const PAdicWitness& w) {
  const u64 p = f.p;
  const int cap = 4 * f.budget + 64;
  // F = y^m - f(x, z) and its three partials, evaluated exactly.
  Int fx = 0, dfx = 0, dfz = 0;
  for (int i = 0; i <= f.d; ++i) {
    Int xi, zi;
    mpz_pow_ui(xi.get_mpz_t(), w.x.get_mpz_t(), i);
    mpz_pow_ui(zi.get_mpz_t(), w.z.get_mpz_t(), f.d - i);
    fx += f.coeffs[i] * xi * zi;
    if (i >= 1) {
      Int xim;
      mpz_pow_ui(xim.get_mpz_t(), w.x.get_mpz_t(), i - 1);
      dfx += Int(i) * f.coeffs[i] * xim * zi;
    }
    if (i < f.d) {
      Int zim;
      mpz_pow_ui(zim.get_mpz_t(), w.z.get_mpz_t(), f.d - i - 1);
      dfz += Int(f.d - i) * f.coeffs[i] * xi * zim;
    }
  }
  Int ym, dym;
  mpz_pow_ui(ym.get_mpz_t(), w.y.get_mpz_t(), f.m);
  mpz_pow_ui(dym.get_mpz_t(), w.y.get_mpz_t(), f.m - 1);
  Int F = ym - fx;
  Int dFy = Int(f.m) * dym, dFx = -dfx, dFz = -dfz;
  int vF = val_capped(F, p, cap);
  for (const Int* dd : {&dFy, &dFx, &dFz}) {
    int vd = val_capped(*dd, p, cap);
    if (vd < cap && vF > 2 * vd) return true;
  }
  return false;
}

Verdict decide_solubility(const PAdicForm& f) {
  if (f.p < 2 || static_cast<int>(f.coeffs.size()) != f.d + 1)
    throw std::invalid_argument("decide_solubility: bad form");
  DescentCtx ctx;
  ctx.p = f.p;
  ctx.m = f.m;
  ctx.wild = (f.p == 3 && f.m == 3);
  if (f.p % f.m == 0 && !ctx.wild)
    throw std::invalid_argument("decide_solubility: p | m unsupported");
  if (f.p == 2 && f.m % 2 == 0)
    throw std::invalid_argument("decide_solubility: p = 2 needs odd m");
  ctx.pc = make_prime_ctx(f.p, f.m);
  // Every unit is an m-th power iff every nonzero residue is one.
  ctx.all_units_mth =
      (ctx.pc.power_residues.size() == f.p - 1) || (f.p == 2);

  std::optional<Terminal> term;
  std::optional<int> chart;  // 0: z = 1, 1: x = 1 (coord is z / p)
  VerdictKind kind = VerdictKind::Insoluble;
  long unknown_total = 0;

  for (int ch = 0; ch < 2 && kind != VerdictKind::Soluble; ++ch) {
    std::vector<Int> h(f.d + 1);
    for (int i = 0; i <= f.d; ++i)
      h[ch == 0 ? i : f.d - i] = f.coeffs[i];  // chart 0: t = x; chart 1: t = z
    int R = 0, rem = f.budget;
    std::vector<Int> g = h;
    Int a = 0;
    int e = 0;
    if (ch == 1) {
      // Restrict to z in p Z_p: substitute t = p s and strip content.
      Int pk = 1;
      for (size_t k = 0; k < g.size(); ++k, pk *= f.p) g[k] = h[k] * pk;
      int c = f.budget + 5;
      for (const Int& gi : g)
        c = std::min(c, val_capped(gi, f.p, f.budget + 5));
      if (c > f.budget) {
        ++unknown_total;
        if (kind != VerdictKind::Soluble) kind = VerdictKind::Unknown;
        continue;
      }
      Int pc_div = pow_int(f.p, c);
      for (Int& gi : g) {
        Int q;
        mpz_divexact(q.get_mpz_t(), gi.get_mpz_t(), pc_div.get_mpz_t());
        gi = q;
      }
      R = c;
      rem = f.budget - c;
      e = 1;  // chart coordinate z = p * s
    }
    Int mod = pow_int(f.p, rem + 5);
    for (Int& gi : g) {
      gi %= mod;
      if (gi < 0) gi += mod;
    }
    ctx.unknown_branches = 0;
    std::optional<Terminal> t;
    VerdictKind k = decide_rec(ctx, g, R, rem, a, e, t);
    unknown_total += ctx.unknown_branches;
    if (k == VerdictKind::Soluble) {
      kind = k;
      term = t;
      chart = ch;
    } else if (k == VerdictKind::Unknown && kind == VerdictKind::Insoluble) {
      kind = VerdictKind::Unknown;
    }
  }

  Verdict out;
  out.kind = kind;
  out.unknown_branches = unknown_total;
  if (kind != VerdictKind::Soluble) return out;

  // Rebuild a witness on the original form and certify it.
  const int L = term->depth + 3 * static_cast<int>(f.m) + 8;
  Int coord = term->coord;
  // Chart polynomial in the chart coordinate (t = x at z = 1, or t = z at
  // x = 1), used only for root refinement.
  std::vector<Int> gfull(f.d + 1);
  for (int i = 0; i <= f.d; ++i)
    gfull[*chart == 0 ? i : f.d - i] = f.coeffs[i];
  PAdicWitness w;
  w.level = L;
  if (term->root) {
    // Split coord = a + p^e t0 back into the disc offset and the root digit.
    const int e = term->root_mod;
    Int pe = pow_int(f.p, e);
    Int a = coord % pe;
    Int t0 = (coord - a) / pe;
    coord = hensel_root(gfull, f.p, a, e, term->depth, t0,
                        term->depth + L + 4);
    w.y = 0;
  } else {
    Int val = eval_poly(gfull, coord);
    int R = val_capped(val, f.p, L);
    Int pr = pow_int(f.p, R), unit;
    mpz_divexact(unit.get_mpz_t(), val.get_mpz_t(), pr.get_mpz_t());
    Int mod = pow_int(f.p, L);
    unit %= mod;
    if (unit < 0) unit += mod;
    Int yu = lift_mth_root(f.p, f.m, unit, L);
    w.y = pow_int(f.p, R / static_cast<int>(f.m)) * yu;
  }
  w.x = (*chart == 0) ? coord : Int(1);
  w.z = (*chart == 0) ? Int(1) : coord;
  if (!verify_witness(f, w))
    throw std::logic_error("decide_solubility: witness failed verification");
  out.witness = w;
  return out;
}

u64 counter_rng(u64 seed, u64 counter) {
  u64 z = seed + counter * 0x9E3779B97F4A7C15ULL;
  for (int round = 0; round < 2; ++round) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
  }
  return z;
}

namespace {

// Uniform integer in [0, p^budget): assemble 64 bits beyond the target
// size and reduce; the modulo bias is below 2^-64.
Int random_mod_power(u64 p, int budget, u64 seed, u64& counter,
                     const Int& modulus) {
  const size_t bits = mpz_sizeinbase(modulus.get_mpz_t(), 2);
  const size_t words = bits / 64 + 2;
  Int acc = 0;
  for (size_t w = 0; w < words; ++w) {
    u64 r = counter_rng(seed, counter++);
    acc <<= 64;
    acc += Int(static_cast<unsigned long>(r >> 32)) * Int(1UL << 16) *
               Int(1UL << 16) +
           Int(static_cast<unsigned long>(r & 0xFFFFFFFFULL));
  }
  (void)p;
  (void)budget;
  return acc % modulus;
}

LocalEstimate run_local(u64 p, u64 m, int d, u64 samples, u64 seed,
                        int budget, bool (*keep)(const std::vector<u64>&)) {
  LocalEstimate est;
  est.p = p;
  const Int modulus = pow_int(p, budget);
  u64 kept = 0, sol = 0, insol = 0, unk = 0;
#pragma omp parallel for schedule(static) \
    reduction(+ : kept, sol, insol, unk)
  for (long long s = 0; s < static_cast<long long>(samples); ++s) {
    // Disjoint counter blocks per sample keep the stream deterministic
    // regardless of thread count.
    u64 counter = static_cast<u64>(s) * 64;
    PAdicForm form;
    form.p = p;
    form.m = m;
    form.d = d;
    form.budget = budget;
    form.coeffs.resize(d + 1);
    for (int i = 0; i <= d; ++i)
      form.coeffs[i] = random_mod_power(p, budget, seed, counter, modulus);
    if (keep) {
      std::vector<u64> digits(d + 1);
      for (int i = 0; i <= d; ++i)
        digits[i] = mpz_fdiv_ui(form.coeffs[i].get_mpz_t(), p);
      if (!keep(digits)) continue;
    }
    ++kept;
    Verdict v = decide_solubility(form);
    if (v.kind == VerdictKind::Soluble)
      ++sol;
    else if (v.kind == VerdictKind::Insoluble)
      ++insol;
    else
      ++unk;
  }
  est.samples = kept;
  est.soluble = sol;
  est.insoluble = insol;
  est.unknown = unk;
  if (kept > 0) {
    est.soluble_fraction = static_cast<double>(sol) / kept;
    est.unknown_fraction = static_cast<double>(unk) / kept;
    est.sigma = std::sqrt(est.soluble_fraction *
                          (1.0 - est.soluble_fraction) / kept);
  }
  return est;
}

}  // namespace

LocalEstimate estimate_rho_local(u64 p, u64 m, int d, u64 samples, u64 seed,
                                 int budget) {
  return run_local(p, m, d, samples, seed, budget, nullptr);
}

LocalEstimate estimate_rho_conditional(u64 p, u64 m, int d, u64 samples,
                                       u64 seed, int budget,
                                       bool (*keep)(const std::vector<u64>&)) {
  return run_local(p, m, d, samples, seed, budget, keep);
}

namespace {

// Durand-Kerner root finder for a real polynomial (leading coeff nonzero).
std::vector<std::complex<double>> all_roots(const std::vector<double>& c) {
  int n = static_cast<int>(c.size()) - 1;
  while (n > 0 && c[n] == 0.0) --n;
  if (n <= 0) return {};
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i)
    z[i] = std::pow(std::complex<double>(0.4, 0.9), i + 1);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (int i = n; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  for (int iter = 0; iter < 300; ++iter) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> d = c[n];
      for (int j = 0; j < n; ++j)
        if (j != i) d *= z[i] - z[j];
      if (std::abs(d) < 1e-300) continue;
      std::complex<double> step = eval(z[i]) / d;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

}  // namespace

double estimate_rho_infinity(u64 m, int d, u64 samples, u64 seed) {
  if (m % 2 == 1) return 1.0;  // odd power: every real value has a root
  u64 positive = 0;
#pragma omp parallel for schedule(static) reduction(+ : positive)
  for (long long s = 0; s < static_cast<long long>(samples); ++s) {
    std::vector<double> c(d + 1);
    for (int i = 0; i <= d; ++i) {
      u64 r = counter_rng(seed, static_cast<u64>(s) * 16 + i);
      c[i] = static_cast<double>(r >> 11) * (2.0 / 9007199254740992.0) - 1.0;
    }
    bool sol = false;
    if (d % 2 == 1 && c[d] != 0.0) {
      sol = true;  // odd degree: the dehomogenization is unbounded above
    } else if (c[d] > 0 || c[0] > 0) {
      sol = true;  // positive at [1:0] or [0:1]
    } else {
      // Maximum over R is attained at a critical point of f(t, 1).
      std::vector<double> dc(d);
      for (int i = 1; i <= d; ++i) dc[i - 1] = i * c[i];
      for (const auto& r : all_roots(dc)) {
        if (std::abs(r.imag()) > 1e-9) continue;
        double t = r.real(), v = 0;
        for (int i = d; i >= 0; --i) v = v * t + c[i];
        if (v > 0) {
          sol = true;
          break;
        }
      }
    }
    if (sol) ++positive;
  }
  return static_cast<double>(positive) / static_cast<double>(samples);
}

}  // namespace locsol
