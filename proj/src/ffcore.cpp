#include "locsol/ffcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace locsol {

namespace {

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^20, no overflow

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Dense univariate polynomial over F_p, lowest degree first, trimmed.
using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// Remainder of a mod b (b nonzero).
Poly pmod(Poly a, const Poly& b, u64 p) {
  trim(a);
  u64 inv_lb = invmod(b.back(), p);
  while (pdeg(a) >= pdeg(b)) {
    u64 q = mulmod(a.back(), inv_lb, p);
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + p * p - q * b[j] % p) % p;
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Exact quotient a / b; callers guarantee divisibility.
Poly pdivexact(Poly a, const Poly& b, u64 p) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 inv_lb = invmod(b.back(), p);
  while (pdeg(a) >= pdeg(b)) {
    u64 c = mulmod(a.back(), inv_lb, p);
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + p * p - c * b[j] % p) % p;
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  return q;
}

void make_monic(Poly& f, u64 p) {
  if (f.empty() || f.back() == 1) return;
  u64 inv = invmod(f.back(), p);
  for (u64& c : f) c = mulmod(c, inv, p);
}

Poly pgcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, p);
  return a;
}

// x^e mod f by square-and-multiply polynomial arithmetic.
Poly x_pow_mod(u64 e, const Poly& f, u64 p) {
  Poly result = {1 % p};
  Poly base = pmod(Poly{0, 1}, f, p);
  while (e) {
    if (e & 1) result = pmod(pmul(result, base, p), f, p);
    base = pmod(pmul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // Deterministic Miller-Rabin for 64-bit with the fixed base set above.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod128 = [](u64 a, u64 b, u64 m) -> u64 {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
  };
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = 1, base = a % n, e = d;
    while (e) {
      if (e & 1) x = mulmod128(x, base, n);
      base = mulmod128(base, base, n);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod128(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeCtx make_prime_ctx(u64 p, u64 m) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  if (m < 2) throw std::invalid_argument("exponent m must be >= 2");
  PrimeCtx ctx;
  ctx.p = p;
  ctx.m = m;
  ctx.class3 = static_cast<int>(p % 3);
  ctx.is_power_residue.assign(p, false);
  for (u64 a = 1; a < p; ++a) {
    u64 r = powmod(a, m, p);
    if (!ctx.is_power_residue[r]) {
      ctx.is_power_residue[r] = true;
      ctx.power_residues.push_back(r);
    }
  }
  std::sort(ctx.power_residues.begin(), ctx.power_residues.end());
  return ctx;
}

std::vector<u64> cubic_residues_mod_27() {
  std::vector<u64> out;
  std::vector<bool> seen(27, false);
  for (u64 a = 1; a < 27; ++a) {
    if (a % 3 == 0) continue;
    u64 r = a * a % 27 * a % 27;
    if (!seen[r]) {
      seen[r] = true;
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cubic_residue_mod_27(u64 a) {
  static const std::vector<u64> set = cubic_residues_mod_27();
  return std::binary_search(set.begin(), set.end(), a % 27);
}

BinaryFormFp::BinaryFormFp(u64 p_, int d_, std::vector<u64> coeffs)
    : p(p_), d(d_), c(std::move(coeffs)) {
  if (c.size() != static_cast<size_t>(d) + 1)
    throw std::invalid_argument("coefficient count must be d+1");
  for (u64& v : c) v %= p;
}

bool BinaryFormFp::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](u64 v) { return v == 0; });
}

u64 BinaryFormFp::eval_affine(u64 x) const {
  u64 acc = 0;
  for (int i = d; i >= 0; --i) acc = (acc * x + c[static_cast<size_t>(i)]) % p;
  return acc;
}

int FactorizationType::total_degree() const {
  int s = 0;
  for (auto& [deg, mult] : parts) s += deg * mult;
  return s;
}

bool FactorizationType::has_linear_simple() const {
  for (auto& [deg, mult] : parts)
    if (deg == 1 && mult == 1) return true;
  return false;
}

std::string FactorizationType::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto& [deg, mult] : parts) {
    if (!first) os << " ";
    first = false;
    os << deg;
    if (mult > 1) os << "^" << mult;
  }
  os << ")";
  return os.str();
}

std::vector<std::pair<ProjPointFp, int>> roots_with_multiplicity(
    const BinaryFormFp& f) {
  if (f.is_zero()) throw std::invalid_argument("zero form has no root list");
  const u64 p = f.p;
  std::vector<std::pair<ProjPointFp, int>> out;

  // Dehomogenize to g(x) = f(x, 1); the factor z^(d - deg g) is the root at
  // infinity.
  Poly g(f.c.begin(), f.c.end());
  trim(g);
  int inf_mult = f.d - pdeg(g);
  for (u64 r = 0; r < p; ++r) {
    if (g.size() <= 1) break;
    // Horner evaluation, then divide out (x - r) while it divides.
    int mult = 0;
    Poly h = g;
    while (h.size() > 1) {
      u64 val = 0;
      for (size_t i = h.size(); i-- > 0;) val = (val * r + h[i]) % p;
      if (val != 0) break;
      // Synthetic division by (x - r).
      Poly q(h.size() - 1);
      u64 carry = 0;
      for (size_t i = h.size(); i-- > 1;) {
        carry = (carry * r + h[i]) % p;
        q[i - 1] = carry;
      }
      h = std::move(q);
      ++mult;
    }
    if (mult > 0) out.push_back({ProjPointFp{false, r}, mult});
  }
  if (inf_mult > 0) out.push_back({ProjPointFp{true, 0}, inf_mult});
  return out;
}

FactorizationType factorization_type(const BinaryFormFp& f) {
  if (f.is_zero()) throw std::invalid_argument("zero form has no type");
  const u64 p = f.p;
  FactorizationType ft;

  Poly g(f.c.begin(), f.c.end());
  trim(g);
  int inf_mult = f.d - pdeg(g);
  if (inf_mult > 0) ft.parts.push_back({1, inf_mult});
  make_monic(g, p);

  // Strip linear factors by direct root search with synthetic division;
  // this is much cheaper than a Frobenius gcd at k = 1.
  for (u64 r = 0; r < p && pdeg(g) >= 1; ++r) {
    int mult = 0;
    for (;;) {
      u64 val = 0;
      for (size_t i = g.size(); i-- > 0;) val = (val * r + g[i]) % p;
      if (val != 0 || g.size() <= 1) break;
      Poly q(g.size() - 1);
      u64 carry = 0;
      for (size_t i = g.size(); i-- > 1;) {
        carry = (carry * r + g[i]) % p;
        q[i - 1] = carry;
      }
      g = std::move(q);
      ++mult;
    }
    if (mult > 0) ft.parts.push_back({1, mult});
  }

  // Distinct-degree peeling with multiplicity recovery on the rootless
  // residual: at degree k, each gcd pass divides out one copy of every
  // distinct degree-k irreducible still present; the drop in factor counts
  // between passes gives the number of factors at each exact multiplicity.
  for (int k = 2; pdeg(g) >= k; ++k) {
    if (pdeg(g) < 2 * k) {  // nothing of degree k..deg-1 fits twice: leftover
      ft.parts.push_back({pdeg(g), 1});
      g = {1};
      break;
    }
    u64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::vector<int> counts;  // distinct degree-k factors seen per pass
    for (;;) {
      if (pdeg(g) < k) break;
      Poly frob = x_pow_mod(pk, g, p);
      // frob - x
      Poly diff = frob;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p - 1) % p;
      trim(diff);
      Poly s = diff.empty() ? g : pgcd(g, diff, p);
      if (pdeg(s) <= 0) break;
      counts.push_back(pdeg(s) / k);
      g = pdivexact(g, s, p);
    }
    counts.push_back(0);
    for (size_t t = 0; t + 1 < counts.size(); ++t) {
      int exact = counts[t] - counts[t + 1];
      for (int i = 0; i < exact; ++i)
        ft.parts.push_back({k, static_cast<int>(t) + 1});
    }
  }
  std::sort(ft.parts.begin(), ft.parts.end());
  return ft;
}

LiftClass classify_liftability(const BinaryFormFp& f, const PrimeCtx& ctx) {
  const u64 p = ctx.p, m = ctx.m;
  if (f.is_zero()) return ZeroForm{};

  if (m % p == 0) {
    if (std::gcd(p - 1, m) != 1)
      throw std::invalid_argument(
          "p | m with gcd(p-1, m) > 1 is not supported");
    // Every residue is an m-th power, so every [x0:z0] lies under a curve
    // point; the y-partial vanishes identically, so Hensel needs a unit
    // x- or z-partial of f at some point.
    std::vector<u64> fx(static_cast<size_t>(f.d), 0);
    std::vector<u64> fz(static_cast<size_t>(f.d), 0);
    for (int i = 1; i <= f.d; ++i)
      fx[static_cast<size_t>(i - 1)] =
          f.c[static_cast<size_t>(i)] * (static_cast<u64>(i) % p) % p;
    for (int i = 0; i < f.d; ++i)
      fz[static_cast<size_t>(i)] =
          f.c[static_cast<size_t>(i)] * (static_cast<u64>(f.d - i) % p) % p;
    auto eval_form = [&](const std::vector<u64>& cs, int deg, u64 x,
                         bool at_inf) -> u64 {
      if (at_inf) return cs[static_cast<size_t>(deg)];
      u64 acc = 0;
      for (int i = deg; i >= 0; --i) acc = (acc * x + cs[static_cast<size_t>(i)]) % p;
      return acc;
    };
    for (u64 x = 0; x < p; ++x)
      if (eval_form(fx, f.d - 1, x, false) != 0 ||
          eval_form(fz, f.d - 1, x, false) != 0)
        return Liftable{};
    if (eval_form(fx, f.d - 1, 0, true) != 0 ||
        eval_form(fz, f.d - 1, 0, true) != 0)
      return Liftable{};
    MultiRootOnly mro;
    for (auto& [pt, mult] : roots_with_multiplicity(f))
      if (mult >= 2) mro.profile.push_back(mult);
    std::sort(mro.profile.begin(), mro.profile.end());
    return mro;
  }

  bool any_zero = false;
  bool any_residue = false;
  auto consider = [&](u64 v) {
    if (v == 0)
      any_zero = true;
    else if (ctx.is_power_residue[v])
      any_residue = true;
  };
  for (u64 x = 0; x < p; ++x) consider(f.eval_affine(x));
  consider(f.eval_infinity());
  if (any_residue) return Liftable{};
  if (!any_zero) return NoFpPoints{};

  auto roots = roots_with_multiplicity(f);
  for (auto& [pt, mult] : roots)
    if (mult == 1) return Liftable{};
  MultiRootOnly mro;
  for (auto& [pt, mult] : roots) mro.profile.push_back(mult);
  std::sort(mro.profile.begin(), mro.profile.end());
  return mro;
}

bool is_liftable(const LiftClass& c) {
  return std::holds_alternative<Liftable>(c);
}

long generic_genus(u64 m, int d, const std::vector<int>& mults) {
  long sum = 0;
  for (int r : mults) {
    if (r <= 0) throw std::invalid_argument("multiplicities must be positive");
    sum += r;
  }
  if (sum != d) throw std::invalid_argument("multiplicities must sum to d");
  long branch = 0;
  long gcd_sum = 0;
  for (int r : mults) {
    u64 g = std::gcd(m, static_cast<u64>(r));
    if (g == m) continue;  // unramified, not a branch point
    ++branch;
    gcd_sum += static_cast<long>(g);
  }
  long two_g = static_cast<long>(m) * (branch - 2) - gcd_sum + 2;
  if (two_g % 2 != 0) throw std::logic_error("branch formula parity failure");
  return two_g / 2;
}

long generic_genus_separable(u64 m, int d) {
  if (d % static_cast<int>(m) != 0)
    throw std::invalid_argument("separable case assumes m | d");
  return static_cast<long>(m - 1) * (d - 2) / 2;
}

}  // namespace locsol
