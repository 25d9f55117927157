#ifndef QAC_GROUP_HPP
#define QAC_GROUP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qac/base.hpp"

namespace qac {

/// A finite group as a Cayley table. Element 0 is the identity, always.
struct FiniteGroup {
  int n = 1;
  Vec tab;  // n*n, tab[i*n+j] = i*j
  Vec inv;

  int mul(int a, int b) const { return tab[a * n + b]; }
  int mul(int a, int b, int c) const { return mul(mul(a, b), c); }
  int conj(int g, int x) const { return mul(mul(g, x), inv[g]); }

  int order_of(int x) const {
    int k = 1, y = x;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool operator==(const FiniteGroup& o) const { return n == o.n && tab == o.tab; }
};

/// Validates a raw table and computes inverses. Throws NotAGroup naming the
/// first violated axiom.
inline FiniteGroup build_group(int order, const Vec& table) {
  if (order <= 0) throw NotAGroup("order must be positive");
  if ((int)table.size() != order * order) throw NotAGroup("table is not order x order");
  for (int v : table)
    if (v < 0 || v >= order) throw NotAGroup("table entry out of range");
  FiniteGroup g;
  g.n = order;
  g.tab = table;
  for (int j = 0; j < order; ++j)
    if (g.mul(0, j) != j)
      throw NotAGroup("identity: 0*" + std::to_string(j) + " != " + std::to_string(j));
  for (int i = 0; i < order; ++i)
    if (g.mul(i, 0) != i)
      throw NotAGroup("identity: " + std::to_string(i) + "*0 != " + std::to_string(i));
  // Latin square
  for (int i = 0; i < order; ++i) {
    std::vector<char> row(order, 0), col(order, 0);
    for (int j = 0; j < order; ++j) {
      if (row[g.mul(i, j)]++) throw NotAGroup("row " + std::to_string(i) + " repeats an entry");
      if (col[g.mul(j, i)]++) throw NotAGroup("column " + std::to_string(i) + " repeats an entry");
    }
  }
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      for (int k = 0; k < order; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
          throw NotAGroup("associativity fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
  g.inv.assign(order, -1);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (g.mul(i, j) == 0) g.inv[i] = j;
  for (int i = 0; i < order; ++i)
    if (g.inv[i] < 0 || g.mul(g.inv[i], i) != 0)
      throw NotAGroup("inverses: element " + std::to_string(i));
  return g;
}

/// A homomorphism recorded elementwise; map[0] must be 0.
struct GroupHom {
  FiniteGroup src, dst;
  Vec map;

  int operator()(int x) const { return map[x]; }

  bool valid() const {
    if ((int)map.size() != src.n || map[0] != 0) return false;
    for (int v : map)
      if (v < 0 || v >= dst.n) return false;
    for (int a = 0; a < src.n; ++a)
      for (int b = 0; b < src.n; ++b)
        if (map[src.mul(a, b)] != dst.mul(map[a], map[b])) return false;
    return true;
  }

  bool injective() const {
    std::vector<char> seen(dst.n, 0);
    for (int v : map)
      if (seen[v]++) return false;
    return true;
  }

  bool surjective() const {
    std::vector<char> seen(dst.n, 0);
    for (int v : map) seen[v] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  bool bijective() const { return src.n == dst.n && injective(); }

  Vec kernel() const {
    Vec k;
    for (int x = 0; x < src.n; ++x)
      if (map[x] == 0) k.push_back(x);
    return k;
  }

  Vec image() const {
    Vec im = map;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }
};

inline GroupHom make_hom(FiniteGroup src, FiniteGroup dst, Vec map) {
  GroupHom h{std::move(src), std::move(dst), std::move(map)};
  if (!h.valid()) throw std::runtime_error("not a homomorphism");
  return h;
}

inline GroupHom identity_hom(const FiniteGroup& g) {
  Vec id(g.n);
  std::iota(id.begin(), id.end(), 0);
  return GroupHom{g, g, id};
}

/// Center as a sorted element list plus the inclusion into G.
inline Vec center(const FiniteGroup& g) {
  Vec z;
  for (int x = 0; x < g.n; ++x) {
    bool cen = true;
    for (int y = 0; y < g.n && cen; ++y) cen = g.mul(x, y) == g.mul(y, x);
    if (cen) z.push_back(x);
  }
  return z;
}

inline Vec centralizer(const FiniteGroup& g, const Vec& subset) {
  Vec c;
  for (int x = 0; x < g.n; ++x) {
    bool ok = true;
    for (int s : subset)
      if (g.mul(x, s) != g.mul(s, x)) { ok = false; break; }
    if (ok) c.push_back(x);
  }
  return c;
}

inline bool is_subgroup(const FiniteGroup& g, const Vec& elems) {
  std::vector<char> in(g.n, 0);
  for (int e : elems) in[e] = 1;
  if (!in[0]) return false;
  for (int a : elems)
    for (int b : elems)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Vec& elems) {
  std::vector<char> in(g.n, 0);
  for (int e : elems) in[e] = 1;
  for (int x = 0; x < g.n; ++x)
    for (int s : elems)
      if (!in[g.conj(x, s)]) return false;
  return true;
}

/// Closure of a seed set under multiplication; returns sorted element list.
inline Vec generated_subgroup(const FiniteGroup& g, const Vec& seed) {
  std::vector<char> in(g.n, 0);
  in[0] = 1;
  Vec frontier{0};
  for (int s : seed)
    if (!in[s]) { in[s] = 1; frontier.push_back(s); }
  bool grew = true;
  while (grew) {
    grew = false;
    Vec cur;
    for (int x = 0; x < g.n; ++x)
      if (in[x]) cur.push_back(x);
    for (int a : cur)
      for (int b : cur) {
        int p = g.mul(a, b);
        if (!in[p]) { in[p] = 1; grew = true; }
      }
  }
  Vec out;
  for (int x = 0; x < g.n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

/// Relabels a subgroup as a standalone group; identity of G must be in elems,
/// which must be sorted, so it lands at index 0.
struct SubgroupView {
  FiniteGroup grp;       // relabeled
  Vec elems;             // elems[i] = index in the ambient group
  Vec ambient_to_local;  // -1 outside the subgroup
};

inline SubgroupView materialize_subgroup(const FiniteGroup& g, Vec elems) {
  std::sort(elems.begin(), elems.end());
  if (!is_subgroup(g, elems)) throw NotASubgroup("element list not closed");
  SubgroupView sv;
  sv.elems = elems;
  sv.ambient_to_local.assign(g.n, -1);
  for (int i = 0; i < (int)elems.size(); ++i) sv.ambient_to_local[elems[i]] = i;
  int m = (int)elems.size();
  Vec tab(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) tab[i * m + j] = sv.ambient_to_local[g.mul(elems[i], elems[j])];
  sv.grp = build_group(m, tab);
  return sv;
}

inline GroupHom inclusion_hom(const SubgroupView& sv, const FiniteGroup& ambient) {
  return GroupHom{sv.grp, ambient, sv.elems};
}

/// Quotient by a normal subgroup. Coset of the identity is index 0; the other
/// cosets are numbered in order of their smallest element.
struct QuotientView {
  FiniteGroup grp;
  GroupHom proj;          // ambient -> quotient
  std::vector<Vec> cosets;  // cosets[i] = sorted ambient elements
};

inline QuotientView quotient(const FiniteGroup& g, Vec normal) {
  std::sort(normal.begin(), normal.end());
  if (!is_subgroup(g, normal)) throw NotASubgroup("quotient by a non-subgroup");
  if (!is_normal(g, normal)) throw NotNormal("quotient by a non-normal subgroup");
  QuotientView qv;
  Vec coset_of(g.n, -1);
  for (int x = 0; x < g.n; ++x) {
    if (coset_of[x] >= 0) continue;
    Vec cs;
    for (int s : normal) cs.push_back(g.mul(x, s));
    std::sort(cs.begin(), cs.end());
    int idx = (int)qv.cosets.size();
    qv.cosets.push_back(cs);
    for (int e : cs) coset_of[e] = idx;
  }
  int m = (int)qv.cosets.size();
  Vec tab(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      tab[i * m + j] = coset_of[g.mul(qv.cosets[i][0], qv.cosets[j][0])];
  qv.grp = build_group(m, tab);
  qv.proj = GroupHom{g, qv.grp, coset_of};
  return qv;
}

// -- permutations ------------------------------------------------------------

inline Vec perm_identity(int n) {
  Vec p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Vec perm_compose(const Vec& a, const Vec& b) {  // (a o b)(x) = a[b[x]]
  Vec r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Vec perm_inverse(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = (int)i;
  return r;
}

inline bool is_automorphism(const FiniteGroup& g, const Vec& p) {
  if ((int)p.size() != g.n || p[0] != 0) return false;
  std::vector<char> seen(g.n, 0);
  for (int v : p) {
    if (v < 0 || v >= g.n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (p[g.mul(a, b)] != g.mul(p[a], p[b])) return false;
  return true;
}

/// Greedy generating set: repeatedly adjoin the smallest element outside the
/// generated subgroup.
inline Vec generating_set(const FiniteGroup& g) {
  Vec gens;
  Vec have = generated_subgroup(g, {});
  while ((int)have.size() < g.n) {
    int pick = -1;
    std::vector<char> in(g.n, 0);
    for (int e : have) in[e] = 1;
    for (int x = 0; x < g.n; ++x)
      if (!in[x]) { pick = x; break; }
    gens.push_back(pick);
    have = generated_subgroup(g, gens);
  }
  return gens;
}

namespace detail {

// Extends a partial map on generators to the whole group by closure.
// Returns empty on conflict.
inline Vec close_hom(const FiniteGroup& src, const FiniteGroup& dst, const Vec& gens,
                     const Vec& imgs) {
  Vec map(src.n, -1);
  map[0] = 0;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] >= 0 && map[gens[i]] != imgs[i]) return {};
    map[gens[i]] = imgs[i];
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < src.n; ++a) {
      if (map[a] < 0) continue;
      for (int b = 0; b < src.n; ++b) {
        if (map[b] < 0) continue;
        int ab = src.mul(a, b), v = dst.mul(map[a], map[b]);
        if (map[ab] < 0) {
          map[ab] = v;
          grew = true;
        } else if (map[ab] != v) {
          return {};
        }
      }
    }
  }
  for (int v : map)
    if (v < 0) return {};  // gens did not generate (cannot happen for full gen set)
  return map;
}

inline void hom_backtrack(const FiniteGroup& src, const FiniteGroup& dst, const Vec& gens,
                          Vec& imgs, size_t k, std::vector<Vec>& out) {
  if (k == gens.size()) {
    Vec map = close_hom(src, dst, gens, imgs);
    if (!map.empty()) out.push_back(map);
    return;
  }
  int ord = src.order_of(gens[k]);
  for (int y = 0; y < dst.n; ++y) {
    if (ord % dst.order_of(y) != 0) continue;  // image order must divide
    imgs[k] = y;
    // cheap consistency probe on the partial assignment
    Vec probe(gens.begin(), gens.begin() + k + 1);
    Vec pimg(imgs.begin(), imgs.begin() + k + 1);
    Vec sub = generated_subgroup(src, probe);
    bool ok = true;
    {
      Vec map(src.n, -1);
      map[0] = 0;
      for (size_t i = 0; i <= k; ++i) map[gens[i]] = imgs[i];
      bool grew = true;
      while (grew && ok) {
        grew = false;
        for (int a : sub) {
          if (map[a] < 0) continue;
          for (int b : sub) {
            if (map[b] < 0) continue;
            int ab = src.mul(a, b), v = dst.mul(map[a], map[b]);
            if (map[ab] < 0) {
              map[ab] = v;
              grew = true;
            } else if (map[ab] != v) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    if (ok) hom_backtrack(src, dst, gens, imgs, k + 1, out);
  }
}

}  // namespace detail

/// All homomorphisms src -> dst, by backtracking over generator images.
inline std::vector<GroupHom> all_homs(const FiniteGroup& src, const FiniteGroup& dst,
                                      const Budget& budget = {}) {
  Vec gens = generating_set(src);
  budget.require(ipow_sat(dst.n, (long long)gens.size()));
  std::vector<Vec> maps;
  if (gens.empty()) {
    maps.push_back(Vec(src.n, 0));
  } else {
    Vec imgs(gens.size(), 0);
    detail::hom_backtrack(src, dst, gens, imgs, 0, maps);
  }
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  std::vector<GroupHom> out;
  for (auto& m : maps) out.push_back(GroupHom{src, dst, m});
  return out;
}

/// Aut(G) as a permutation group on G's elements, together with the
/// evaluation action. Backtracking over generator images, never order!.
struct AutGroup {
  FiniteGroup grp;            // abstract group of order = #automorphisms
  std::vector<Vec> perms;     // perms[i] = the automorphism as a permutation
};

inline AutGroup automorphisms(const FiniteGroup& g, int order_bound = 16) {
  if (g.n > order_bound)
    throw OrderBoundExceeded("automorphisms: order " + std::to_string(g.n) + " exceeds bound " +
                             std::to_string(order_bound));
  std::vector<Vec> perms;
  for (auto& h : all_homs(g, g))
    if (GroupHom{g, g, h.map}.bijective()) perms.push_back(h.map);
  std::sort(perms.begin(), perms.end());  // identity is lex-least among perms fixing prefix
  AutGroup ag;
  ag.perms = perms;
  std::map<Vec, int> idx;
  for (int i = 0; i < (int)perms.size(); ++i) idx[perms[i]] = i;
  int m = (int)perms.size();
  Vec tab(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) tab[i * m + j] = idx.at(perm_compose(perms[i], perms[j]));
  ag.grp = build_group(m, tab);
  return ag;
}

/// G ->> Inn(G) = G/Z(G).
inline QuotientView inn_quotient(const FiniteGroup& g) { return quotient(g, center(g)); }

inline GroupHom inn_hom(const FiniteGroup& g) { return inn_quotient(g).proj; }

// -- stock groups ------------------------------------------------------------

inline FiniteGroup trivial_group() { return build_group(1, {0}); }

inline FiniteGroup cyclic_group(int n) {
  Vec tab(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tab[i * n + j] = (i + j) % n;
  return build_group(n, tab);
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  Vec tab(n * n);
  auto enc = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          tab[enc(x1, y1) * n + enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
  return build_group(n, tab);
}

inline FiniteGroup klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }

/// Symmetric group on k letters, elements = lex-sorted permutations.
inline FiniteGroup symmetric_group(int k) {
  std::vector<Vec> perms;
  Vec p = perm_identity(k);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<Vec, int> idx;
  for (int i = 0; i < (int)perms.size(); ++i) idx[perms[i]] = i;
  int n = (int)perms.size();
  Vec tab(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tab[i * n + j] = idx.at(perm_compose(perms[i], perms[j]));
  return build_group(n, tab);
}

/// Dihedral group of order 2n: i<n rotations, i>=n reflections.
inline FiniteGroup dihedral_group(int n) {
  int m = 2 * n;
  auto mul = [&](int x, int y) {
    int rx = x % n, ry = y % n;
    bool fx = x >= n, fy = y >= n;
    int r = fx ? (rx - ry % n + 2 * n) % n : (rx + ry) % n;
    return (fx ^ fy) ? n + r : r;
  };
  Vec tab(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) tab[i * m + j] = mul(i, j);
  return build_group(m, tab);
}

/// Quaternion group; elements 0..7 = 1, i, j, k, -1, -i, -j, -k.
inline FiniteGroup quaternion_group() {
  // basis multiplication: (sign, unit) with units e,i,j,k
  auto umul = [](int a, int b, int& sign) {
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1},
                                  {+1, -1, +1, -1},
                                  {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
    sign = sgn[a][b];
    return prod[a][b];
  };
  Vec tab(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int s;
      int u = umul(x % 4, y % 4, s);
      int neg = (x / 4 + y / 4 + (s < 0 ? 1 : 0)) % 2;
      tab[x * 8 + y] = neg * 4 + u;
    }
  return build_group(8, tab);
}

/// All groups of a given order (<= 8) up to isomorphism, as Cayley tables.
inline std::vector<FiniteGroup> small_groups(int order) {
  switch (order) {
    case 1: return {trivial_group()};
    case 2: return {cyclic_group(2)};
    case 3: return {cyclic_group(3)};
    case 4: return {cyclic_group(4), klein_four()};
    case 5: return {cyclic_group(5)};
    case 6: return {cyclic_group(6), symmetric_group(3)};
    case 7: return {cyclic_group(7)};
    case 8:
      return {cyclic_group(8), direct_product(cyclic_group(4), cyclic_group(2)),
              direct_product(cyclic_group(2), klein_four()), dihedral_group(4),
              quaternion_group()};
    default: return {};
  }
}

}  // namespace qac

#endif
