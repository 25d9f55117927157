#ifndef QAC_COCHAIN_HPP
#define QAC_COCHAIN_HPP

#include <vector>

#include "qac/gamma.hpp"

namespace qac {

// Inhomogeneous normalized cochains C^n(Gamma, A), stored as flat vectors of
// module-element indices, one per Gamma^n tuple (row-major).

inline long long cochain_size(int gamma_n, int deg) { return ipow_sat(gamma_n, deg); }

inline int tuple_index(int gamma_n, const Vec& t) {
  int idx = 0;
  for (int g : t) idx = idx * gamma_n + g;
  return idx;
}

/// Indices of tuples with every component nonidentity; all other positions of
/// a normalized cochain are forced to the identity.
inline Vec free_positions(int gamma_n, int deg) {
  Vec out;
  long long total = cochain_size(gamma_n, deg);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    bool free = true;
    for (int i = 0; i < deg; ++i) {
      if (rest % gamma_n == 0) { free = false; break; }
      rest /= gamma_n;
    }
    if (free) out.push_back((int)idx);
  }
  return out;
}

inline Vec cochain_zero(int gamma_n, int deg) { return Vec(cochain_size(gamma_n, deg), 0); }

inline Vec cochain_add(const FiniteGroup& A, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = A.mul(a[i], b[i]);
  return r;
}

inline Vec cochain_neg(const FiniteGroup& A, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = A.inv[a[i]];
  return r;
}

inline bool cochain_is_zero(const Vec& a) {
  for (int v : a)
    if (v) return false;
  return true;
}

/// Standard inhomogeneous differential on normalized cochains.
inline Vec diff(const GammaGroup& A, int deg, const Vec& c) {
  int gn = A.gamma.n;
  const FiniteGroup& M = A.grp;
  long long out_size = cochain_size(gn, deg + 1);
  Vec out(out_size, 0);
  Vec t(deg + 1);
  for (long long idx = 0; idx < out_size; ++idx) {
    long long rest = idx;
    for (int i = deg; i >= 0; --i) {
      t[i] = (int)(rest % gn);
      rest /= gn;
    }
    // term 0: g0 . c(g1..gn)
    Vec sub(t.begin() + 1, t.end());
    int acc = A.apply(t[0], c[tuple_index(gn, sub)]);
    // middle terms: (-1)^i c(.., g_{i-1} g_i, ..)
    for (int i = 1; i <= deg; ++i) {
      Vec m;
      m.reserve(deg);
      for (int j = 0; j < i - 1; ++j) m.push_back(t[j]);
      m.push_back(A.gamma.mul(t[i - 1], t[i]));
      for (int j = i + 1; j <= deg; ++j) m.push_back(t[j]);
      int v = c[tuple_index(gn, m)];
      acc = M.mul(acc, (i % 2) ? M.inv[v] : v);
    }
    // last term: (-1)^{deg+1} c(g0..g_{deg-1})
    Vec head(t.begin(), t.end() - 1);
    int v = c[tuple_index(gn, head)];
    acc = M.mul(acc, ((deg + 1) % 2) ? M.inv[v] : v);
    out[idx] = acc;
  }
  return out;
}

/// Enumerates all normalized degree-n cochains, calling fn on each.
template <typename Fn>
void for_each_cochain(const GammaGroup& A, int deg, const Budget& budget, Fn&& fn) {
  Vec free = free_positions(A.gamma.n, deg);
  budget.require(ipow_sat(A.grp.n, (long long)free.size()));
  Vec c = cochain_zero(A.gamma.n, deg);
  size_t k = free.size();
  Vec odo(k, 0);
  while (true) {
    fn(c);
    size_t i = 0;
    for (; i < k; ++i) {
      if (++odo[i] < A.grp.n) {
        c[free[i]] = odo[i];
        break;
      }
      odo[i] = 0;
      c[free[i]] = 0;
    }
    if (i == k) break;
  }
}

}  // namespace qac

#endif
