#include "locsol/census.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace locsol {

namespace {

// Count polynomials from the per-degree tables, as strings in the symbol p.
// First of each pair is the up-to-scaling count N_{d,i}, second the monic
// count N'_{d,i}.
const std::vector<std::vector<std::pair<const char*, const char*>>>&
tables() {
  static const std::vector<std::vector<std::pair<const char*, const char*>>>
      t = {
          // d = 2
          {{"(p-1)*p/2", "(p-1)*p/2"},
           {"(p+1)*p/2", "(p-1)*p/2"},
           {"p+1", "p"}},
          // d = 3
          {{"(p+1)*(p-1)*p/3", "(p+1)*(p-1)*p/3"},
           {"(2*p+1)*(p+1)*p/3", "2*(p+1)*(p-1)*p/3"},
           {"p+1", "p"}},
          // d = 4
          {{"(3*p^2+p+2)*(p-1)*p/8", "(3*p^2+p+2)*(p-1)*p/8"},
           {"(5*p^2+p+2)*(p+1)*p/8", "(5*p^2+3*p+2)*(p-1)*p/8"},
           {"(p+1)*(p-1)*p/2", "(p-1)*p^2/2"},
           {"(p+1)*p/2", "(p-1)*p/2"},
           {"p+1", "p"}},
          // d = 5
          {{"(11*p^2-5*p+6)*(p+1)*(p-1)*p/30",
            "(11*p^2-5*p+6)*(p+1)*(p-1)*p/30"},
           {"(19*p^3+6*p^2+4*p+1)*(p+1)*p/30",
            "(19*p^3+14*p^2+4*p-6)*(p-1)*p/30"},
           {"(p+1)^2*(p-1)*p/3", "(p+1)*(p-1)*p^2/3"},
           {"(p+1)*(p-1)*p/2", "(p-1)*p^2/2"},
           {"(p+1)*p", "(p-1)*p"},
           {"p+1", "p"}},
          // d = 6
          {{"(53*p^4+26*p^3+19*p^2-2*p+24)*(p-1)*p/144",
            "(53*p^4+26*p^3+19*p^2-2*p+24)*(p-1)*p/144"},
           {"(91*p^4+26*p^3+23*p^2+16*p-12)*(p+1)*p/144",
            "(91*p^3-27*p^2+50*p-48)*(p+1)*(p-1)*p/144"},
           {"(3*p^2+p+2)*(p+1)*(p-1)*p/8", "(3*p^2+p+2)*(p-1)*p^2/8"},
           {"(p+1)*(p-1)*p^2/4", "(p-1)^2*p^2/4"},
           {"(p+1)*(p-1)*p/6", "(p-1)*(p-2)*p/6"},
           {"(p+1)^2*(p-1)*p/3", "(p+1)*(p-1)*p^2/3"},
           {"(p+1)*p/2", "(p-1)*p/2"},
           {"(p+1)*(p-1)*p/2", "(p-1)*p^2/2"},
           {"(p+1)*p", "(p-1)*p"},
           {"p+1", "p"}},
      };
  return t;
}

int table_index(int d) {
  if (d < 2 || d > 6) throw std::invalid_argument("census covers d = 2..6");
  return d - 2;
}

}  // namespace

const std::vector<std::string>& census_row_labels(int d) {
  static const std::vector<std::vector<std::string>> labels = {
      {"no roots", "(1*)", "(1^2)"},
      {"no roots", "(1*)", "(1^3)"},
      {"no roots", "(1*)", "(1^2 2)", "(1^2 1^2)", "(1^4)"},
      {"no roots", "(1*)", "(1^2 3)", "(1^3 2)", "(1^2 1^3)", "(1^5)"},
      {"no roots", "(1*)", "(1^2 4) or (1^2 2 2)", "(1^2 1^2 2)",
       "(1^2 1^2 1^2)", "(1^3 3)", "(1^3 1^3)", "(1^4 2)", "(1^2 1^4)",
       "(1^6)"},
  };
  return labels[static_cast<size_t>(table_index(d))];
}

int census_row_of_type(int d, const FactorizationType& type) {
  table_index(d);  // validate
  std::vector<int> linear;  // multiplicities of linear factors
  for (auto& [deg, mult] : type.parts)
    if (deg == 1) linear.push_back(mult);
  if (linear.empty()) return 0;
  if (std::find(linear.begin(), linear.end(), 1) != linear.end()) return 1;
  std::sort(linear.begin(), linear.end());
  auto match = [&](std::initializer_list<int> m) {
    return linear == std::vector<int>(m);
  };
  switch (d) {
    case 2:
      if (match({2})) return 2;
      break;
    case 3:
      if (match({3})) return 2;
      break;
    case 4:
      if (match({2})) return 2;
      if (match({2, 2})) return 3;
      if (match({4})) return 4;
      break;
    case 5:
      if (match({2})) return 2;
      if (match({3})) return 3;
      if (match({2, 3})) return 4;
      if (match({5})) return 5;
      break;
    case 6:
      if (match({2})) return 2;
      if (match({2, 2})) return 3;
      if (match({2, 2, 2})) return 4;
      if (match({3})) return 5;
      if (match({3, 3})) return 6;
      if (match({4})) return 7;
      if (match({2, 4})) return 8;
      if (match({6})) return 9;
      break;
  }
  throw std::logic_error("unclassifiable factorization type " +
                         type.to_string());
}

Int CensusTable::total() const {
  Int s = 0;
  for (const Int& c : counts) s += c;
  return s;
}

RatFun count_formula_ratfun(int d, int row, bool monic) {
  const auto& tab = tables()[static_cast<size_t>(table_index(d))];
  if (row < 0 || row >= static_cast<int>(tab.size()))
    throw std::invalid_argument("row outside the census table");
  const char* expr =
      monic ? tab[static_cast<size_t>(row)].second
            : tab[static_cast<size_t>(row)].first;
  return parse_ratfun(expr);
}

Int count_by_type_formula(int d, int row, u64 p, bool monic) {
  Rat v = count_formula_ratfun(d, row, monic)
              .eval(Rat(static_cast<unsigned long>(p)));
  if (v.get_den() != 1)
    throw std::logic_error("count polynomial evaluated to a non-integer");
  return v.get_num();
}

CensusTable census_bruteforce(int d, u64 p, bool monic) {
  table_index(d);  // validate
  double size = 1;
  for (int i = 0; i < d; ++i) size *= static_cast<double>(p);
  if (size > 1e9) throw std::invalid_argument("p^d exceeds the 10^9 guard");

  CensusTable out;
  out.d = d;
  out.p = p;
  out.monic = monic;
  out.counts.assign(census_row_labels(d).size(), Int(0));

  // Strata: for monic, only top degree j = d (c_d = 1); up to scaling also
  // j < d with c_j = 1 and everything above zero (the z^(d-j) * monic
  // canonical representatives).
  std::vector<int> strata;
  if (monic)
    strata.push_back(d);
  else
    for (int j = 0; j <= d; ++j) strata.push_back(j);

  for (int j : strata) {
    u64 inner = 1;
    for (int i = 0; i < j; ++i) inner *= p;

    std::vector<std::vector<Int>> counts_tls;
    std::vector<std::map<std::string, Int>> split_tls;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
      std::vector<Int> local(out.counts.size(), Int(0));
      std::map<std::string, Int> local_split;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
      for (long long code = 0; code < static_cast<long long>(inner); ++code) {
        std::vector<u64> c(static_cast<size_t>(d) + 1, 0);
        u64 v = static_cast<u64>(code);
        for (int i = 0; i < j; ++i) {
          c[static_cast<size_t>(i)] = v % p;
          v /= p;
        }
        c[static_cast<size_t>(j)] = 1;
        auto type = factorization_type(BinaryFormFp(p, d, c));
        local[static_cast<size_t>(census_row_of_type(d, type))] += 1;
        local_split[type.to_string()] += 1;
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        counts_tls.push_back(std::move(local));
        split_tls.push_back(std::move(local_split));
      }
    }
    for (auto& local : counts_tls)
      for (size_t i = 0; i < local.size(); ++i) out.counts[i] += local[i];
    for (auto& local : split_tls)
      for (auto& [k, n] : local) out.split[k] += n;
  }
  return out;
}

Rat eta(int d, int row, u64 p, bool monic) {
  Int num = count_by_type_formula(d, row, p, monic);
  Int den = 1;
  if (monic) {
    for (int i = 0; i < d; ++i) den *= static_cast<unsigned long>(p);
  } else {
    den = 0;
    Int pw = 1;
    for (int j = 0; j <= d; ++j) {
      den += pw;
      pw *= static_cast<unsigned long>(p);
    }
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

RatFun eta_ratfun(int d, int row, bool monic) {
  RatFun num = count_formula_ratfun(d, row, monic);
  RatFun den;
  RatFun p = RatFun::symbol_p();
  if (monic) {
    den = p.pow(d);
  } else {
    den = RatFun();
    for (int j = 0; j <= d; ++j) den = den + p.pow(j);
  }
  return num / den;
}

Int count_irreducible(int d, u64 p) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  auto mobius = [](int n) {
    int mu = 1;
    for (int q = 2; q * q <= n; ++q) {
      if (n % q == 0) {
        n /= q;
        if (n % q == 0) return 0;
        mu = -mu;
      }
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  Int sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(d / e);
    if (mu == 0) continue;
    Int pe = 1;
    for (int i = 0; i < e; ++i) pe *= static_cast<unsigned long>(p);
    sum += mu * pe;
  }
  if (sum % d != 0) throw std::logic_error("irreducible count not integral");
  return sum / d;
}

void write_census_csv(std::ostream& os, const CensusTable& table) {
  const auto& labels = census_row_labels(table.d);
  for (size_t i = 0; i < table.counts.size(); ++i) {
    Rat e = eta(table.d, static_cast<int>(i), table.p, table.monic);
    os << table.d << ",\"" << labels[i] << "\"," << (table.monic ? 1 : 0)
       << "," << table.p << "," << table.counts[i].get_str() << ","
       << e.get_num().get_str() << "," << e.get_den().get_str() << "\n";
  }
}

}  // namespace locsol
