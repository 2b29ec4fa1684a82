// Deliberately naive reference computations for the tests. Nothing here calls
// into the library's arithmetic, ordering or elimination code; forms are read
// only through their exponent vectors and coefficients.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "maxvar/form.hpp"

namespace oracle {

using u64 = std::uint64_t;
using Exps = std::vector<int>;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) + b) % p); }
inline u64 submod(u64 a, u64 b, u64 p) { return addmod(a, p - b % p, p); }
inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}
inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

struct Poly {
  int nvars = 0;
  std::map<Exps, u64> terms;
};

inline Poly from_form(const maxvar::HomogeneousForm& f) {
  Poly out{f.num_variables(), {}};
  for (const auto& t : f.terms()) out.terms[t.monomial.exponents(f.num_variables())] = t.coefficient;
  return out;
}

inline void monomials_rec(int var, int nvars, int remaining, Exps& cur, std::vector<Exps>& out) {
  if (var == nvars - 1) {
    cur[static_cast<std::size_t>(var)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[static_cast<std::size_t>(var)] = e;
    monomials_rec(var + 1, nvars, remaining - e, cur, out);
  }
}

/// All exponent vectors of the given degree, in lexicographically ascending
/// order (the opposite of the library's enumeration).
inline std::vector<Exps> monomials(int nvars, int degree) {
  std::vector<Exps> out;
  if (degree < 0) return out;
  Exps cur(static_cast<std::size_t>(nvars), 0);
  monomials_rec(0, nvars, degree, cur, out);
  return out;
}

inline std::vector<Poly> partials(const Poly& f, u64 p) {
  std::vector<Poly> out;
  for (int i = 0; i < f.nvars; ++i) {
    Poly d{f.nvars, {}};
    for (const auto& [e, c] : f.terms) {
      int a = e[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Exps lowered = e;
      --lowered[static_cast<std::size_t>(i)];
      u64 v = mulmod(c, static_cast<u64>(a) % p, p);
      if (v != 0) d.terms[lowered] = addmod(d.terms[lowered], v, p);
    }
    out.push_back(std::move(d));
  }
  return out;
}

/// Row-by-row Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    u64 inv = invmod(rows[r][c], p);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      u64 f = mulmod(rows[i][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = submod(rows[i][k], mulmod(f, rows[r][k], p), p);
    }
    ++r;
  }
  return r;
}

/// Rows m * g for every monomial m of degree q - deg g and every g, as dense
/// vectors over monomials(nvars, q).
inline std::vector<std::vector<u64>> macaulay_rows(const std::vector<Poly>& gens, int gen_degree, int q, u64 p) {
  int nvars = gens.empty() ? 0 : gens[0].nvars;
  std::vector<Exps> cols = monomials(nvars, q);
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  std::vector<std::vector<u64>> rows;
  for (const Exps& m : monomials(nvars, q - gen_degree)) {
    for (const Poly& g : gens) {
      std::vector<u64> row(cols.size(), 0);
      for (const auto& [e, c] : g.terms) {
        Exps prod = e;
        for (std::size_t k = 0; k < prod.size(); ++k) prod[k] += m[k];
        row[index.at(prod)] = addmod(row[index.at(prod)], c, p);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// dim (k[x]/(dF))_q by rank of the Macaulay matrix.
inline u64 quotient_dim(const Poly& f, int d, int q, u64 p) {
  std::size_t cols = monomials(f.nvars, q).size();
  if (q < d - 1) return cols;
  return cols - rank_mod_p(macaulay_rows(partials(f, p), d - 1, q, p), p);
}

/// Whether g (degree q) lies in the degree-q part of the Jacobian ideal.
inline bool in_jacobian_ideal(const Poly& f, int d, const Poly& g, int q, u64 p) {
  auto rows = macaulay_rows(partials(f, p), d - 1, q, p);
  std::vector<Exps> cols = monomials(f.nvars, q);
  std::vector<u64> v(cols.size(), 0);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    auto it = g.terms.find(cols[i]);
    if (it != g.terms.end()) v[i] = it->second;
  }
  std::size_t base = rank_mod_p(rows, p);
  rows.push_back(v);
  return rank_mod_p(rows, p) == base;
}

inline Poly multiply(const Poly& a, const Poly& b, u64 p) {
  Poly out{a.nvars, {}};
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      Exps e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.terms[e] = addmod(out.terms[e], mulmod(ca, cb, p), p);
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  return out;
}

/// Coefficients of (1 + t + ... + t^(d-2))^(n+1) by repeated convolution.
inline std::vector<u64> series_by_convolution(int n, int d) {
  std::vector<u64> acc{1};
  for (int k = 0; k <= n; ++k) {
    std::vector<u64> next(acc.size() + static_cast<std::size_t>(d - 2), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (int j = 0; j <= d - 2; ++j) next[i + static_cast<std::size_t>(j)] += acc[i];
    }
    acc = std::move(next);
  }
  return acc;
}

/// The Fermat ring k[x]/(x_i^(d-1)) has the monomials with every exponent at
/// most d-2 as a basis. Counts those of degree q.
inline u64 fermat_dim(int n, int d, int q) {
  u64 count = 0;
  for (const Exps& e : monomials(n + 1, q)) {
    bool ok = true;
    for (int a : e) ok = ok && a <= d - 2;
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace oracle
