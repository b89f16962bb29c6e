// ratfun.cpp -- exact polynomial / rational-function arithmetic in one symbol.

#include "locsol/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace locsol {

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::constant(const Rat& c) {
  if (c == 0) return QPoly();
  return QPoly(std::vector<Rat>{c});
}

QPoly QPoly::monomial(const Rat& c, int degree) {
  if (c == 0) return QPoly();
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& QPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading() of zero polynomial");
  return c_.back();
}

Rat QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  QPoly out;
  out.c_ = std::move(r);
  return out;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return QPoly(std::move(r));
}

QPoly QPoly::scaled(const Rat& s) const {
  if (s == 0) return QPoly();
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= s;
  QPoly out;
  out.c_ = std::move(r);
  return out;
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return QPoly();
  std::vector<Rat> rem(c_);
  int dr = static_cast<int>(rem.size()) - 1;
  int dd = divisor.degree();
  if (dr < dd) throw std::domain_error("inexact polynomial division");
  std::vector<Rat> q(dr - dd + 1, Rat(0));
  for (int k = dr - dd; k >= 0; --k) {
    Rat f = rem[k + dd] / divisor.c_.back();
    q[k] = f;
    if (f != 0)
      for (int i = 0; i <= dd; ++i) rem[k + i] -= f * divisor.c_[i];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return QPoly(std::move(q));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat a = coeff(i);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rat mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "p";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Integer-polynomial helpers for gcd (subresultant remainder sequence).

namespace {

using ZPoly = std::vector<Int>;  // lowest degree first, trimmed

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int zcontent(const ZPoly& a) {
  Int g(0);
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

void zdiv_scalar(ZPoly& a, const Int& s) {
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
}

// Converts to the primitive integer polynomial with positive leading
// coefficient equal (up to a positive rational scalar) to q.
ZPoly primitive_part(const QPoly& q) {
  if (q.is_zero()) return {};
  Int l(1);
  for (const auto& x : q.coeffs())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZPoly z;
  z.reserve(q.coeffs().size());
  for (const auto& x : q.coeffs()) {
    Rat v = x * Rat(l);
    v.canonicalize();
    z.push_back(Int(v.get_num()));
  }
  Int c = zcontent(z);
  if (c != 0) zdiv_scalar(z, c);
  if (!z.empty() && z.back() < 0)
    for (auto& x : z) x = -x;
  return z;
}

// Pseudo-remainder prem(a, b) = lb^(da-db+1) * a  mod  b, for deg a >= deg b.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  const Int& lb = b.back();
  int da = static_cast<int>(a.size()) - 1;
  for (int k = da - db; k >= 0; --k) {
    // a <- lb * a - a[k+db] * x^k * b  (classical pseudo-division step);
    // exactly da-db+1 scalings by lb even when the degree drops early, so the
    // result is the textbook pseudo-remainder and the subresultant divisor
    // chain below stays exact.
    Int top = a[k + db];
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[k + i] -= top * b[i];
  }
  ztrim(a);
  return a;
}

QPoly zpoly_to_q(const ZPoly& z) {
  std::vector<Rat> v;
  v.reserve(z.size());
  for (const auto& x : z) v.emplace_back(x);
  return QPoly(std::move(v));
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  ZPoly u = primitive_part(a), v = primitive_part(b);
  if (u.empty()) return zpoly_to_q(v);
  if (v.empty()) return zpoly_to_q(u);
  if (u.size() < v.size()) std::swap(u, v);
  // Subresultant PRS keeps coefficient growth polynomial while staying exact.
  Int g(1), h(1);
  while (true) {
    int delta = (static_cast<int>(u.size()) - 1) - (static_cast<int>(v.size()) - 1);
    ZPoly r = pseudo_rem(u, v);
    if (r.empty()) break;
    if (r.size() == 1) {
      v = {Int(1)};
      break;
    }
    u = v;
    v = r;
    Int divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    zdiv_scalar(v, divisor);
    g = u.back();
    Int hp(1);
    for (int i = 0; i < delta; ++i) hp *= g;
    if (delta == 1)
      h = g;
    else if (delta > 1) {
      // h = g^delta / h^{delta-1}
      Int hd(1);
      for (int i = 0; i < delta - 1; ++i) hd *= h;
      mpz_divexact(h.get_mpz_t(), hp.get_mpz_t(), hd.get_mpz_t());
    }
  }
  Int c = zcontent(v);
  if (c != 0) zdiv_scalar(v, c);
  if (!v.empty() && v.back() < 0)
    for (auto& x : v) x = -x;
  return zpoly_to_q(v);
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  // Scale so den is integer, content 1, positive leading coefficient.
  ZPoly dz = primitive_part(den_);
  QPoly den_prim = zpoly_to_q(dz);
  // den_ = s * den_prim with s rational; divide both parts by s.
  Rat s = den_.leading() / den_prim.leading();
  den_ = den_prim;
  num_ = num_.scaled(Rat(1) / s);
}

RatFun RatFun::constant(const Rat& c) {
  RatFun r;
  if (c == 0) return r;
  Rat cc = c;
  cc.canonicalize();
  r.num_ = QPoly::constant(Rat(cc.get_num()));
  r.den_ = QPoly::constant(Rat(cc.get_den()));
  return r;
}

RatFun RatFun::symbol_p() {
  RatFun r;
  r.num_ = QPoly::monomial(Rat(1), 1);
  r.den_ = QPoly::constant(1);
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
  // Cross-cancel first to keep intermediate degrees down.
  QPoly g1 = poly_gcd(num_, o.den_);
  QPoly g2 = poly_gcd(o.num_, den_);
  QPoly n1 = g1.degree() > 0 ? num_.divide_exact(g1) : num_;
  QPoly d2 = g1.degree() > 0 ? o.den_.divide_exact(g1) : o.den_;
  QPoly n2 = g2.degree() > 0 ? o.num_.divide_exact(g2) : o.num_;
  QPoly d1 = g2.degree() > 0 ? den_.divide_exact(g2) : den_;
  return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  RatFun inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  return *this * RatFun(inv.num_, inv.den_);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return RatFun::from_int(1) / pow(-e);
  RatFun acc = RatFun::from_int(1);
  RatFun base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  Rat r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

std::string RatFun::to_string() const {
  if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at offset " + std::to_string(i) +
                                ": " + why);
  }

  RatFun expr() {
    RatFun v = eat('-') ? -term() : term();
    while (true) {
      skip();
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  RatFun term() {
    RatFun v = factor();
    while (true) {
      skip();
      if (eat('*'))
        v = v * factor();
      else if (eat('/'))
        v = v / factor();
      else
        return v;
    }
  }

  RatFun factor() {
    RatFun v = base();
    skip();
    if (eat('^')) {
      skip();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) fail("exponent expected");
      v = v.pow(std::stoi(s.substr(start, i - start)));
    }
    return v;
  }

  RatFun base() {
    skip();
    if (i >= s.size()) fail("unexpected end of input");
    if (eat('(')) {
      RatFun v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (s[i] == 'p') {
      ++i;
      return RatFun::symbol_p();
    }
    if (eat('-')) return -base();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("number, 'p', or '(' expected");
    return RatFun::constant(Rat(Int(s.substr(start, i - start))));
  }
};

}  // namespace

RatFun parse_ratfun(const std::string& text) {
  Parser p(text);
  RatFun v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return v;
}

Rat parse_rat(const std::string& text) {
  Rat r(text);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Linear solving (fraction-free Bareiss over Q[p] after clearing rows)

std::vector<RatFun> solve_linear(std::vector<std::vector<RatFun>> a,
                                 std::vector<RatFun> b) {
  const size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_linear: shape mismatch");
  for (auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_linear: not square");

  // Clear denominators row by row: M[i][j] in Q[p].
  std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    QPoly lcm = QPoly::constant(1);
    auto fold = [&lcm](const QPoly& d) {
      QPoly g = poly_gcd(lcm, d);
      lcm = lcm.divide_exact(g.degree() > 0 ? g : QPoly::constant(1)) * d;
    };
    for (size_t j = 0; j < n; ++j) fold(a[i][j].den());
    fold(b[i].den());
    for (size_t j = 0; j < n; ++j)
      m[i][j] = a[i][j].num() * lcm.divide_exact(a[i][j].den());
    m[i][n] = b[i].num() * lcm.divide_exact(b[i].den());
  }

  // Bareiss fraction-free elimination: divisions by the previous pivot are
  // exact in Q[p], keeping entry degrees linear in the elimination depth.
  QPoly prev = QPoly::constant(1);
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n)
        throw std::domain_error("singular system: pivot " + std::to_string(k) +
                                " vanishes identically");
      std::swap(m[k], m[swap_row]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j <= n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = QPoly();
    }
    prev = m[k][k];
  }

  // Back-substitution in the rational-function field.
  std::vector<RatFun> x(n);
  for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
    RatFun acc(m[i][n], QPoly::constant(1));
    for (size_t j = i + 1; j < n; ++j)
      acc = acc - RatFun(m[i][j], QPoly::constant(1)) * x[j];
    x[i] = acc / RatFun(m[i][i], QPoly::constant(1));
  }
  return x;
}

std::optional<std::pair<Rat, int>> leading_asymptotic(const RatFun& f) {
  if (f.is_zero()) return std::nullopt;
  int drop = f.den().degree() - f.num().degree();
  if (drop <= 0)
    throw std::domain_error("leading_asymptotic: input does not decay");
  Rat c = f.num().leading() / f.den().leading();
  c.canonicalize();
  return std::make_pair(c, drop);
}

std::string to_decimal(const Rat& value, int digits) {
  Rat v = value;
  v.canonicalize();
  bool neg = v < 0;
  if (neg) v = -v;
  Int ip = v.get_num() / v.get_den();
  Rat frac = v - Rat(ip);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int fd = (frac.get_num() * scale) / frac.get_den();
  std::string fs = fd.get_str();
  if (static_cast<int>(fs.size()) < digits)
    fs.insert(fs.begin(), digits - fs.size(), '0');
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (digits > 0) out += "." + fs;
  return out;
}

}  // namespace locsol
