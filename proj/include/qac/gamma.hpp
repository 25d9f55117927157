#ifndef QAC_GAMMA_HPP
#define QAC_GAMMA_HPP

#include <string>
#include <vector>

#include "qac/group.hpp"

namespace qac {

/// A finite group with a left action of the operator group Gamma by
/// automorphisms: act[s] is a permutation, act[s*t] = act[s] o act[t].
struct GammaGroup {
  FiniteGroup gamma;
  FiniteGroup grp;
  std::vector<Vec> act;  // one permutation of grp per gamma element

  int apply(int s, int x) const { return act[s][x]; }

  bool valid() const {
    if ((int)act.size() != gamma.n) return false;
    for (const auto& p : act)
      if (!is_automorphism(grp, p)) return false;
    if (act[0] != perm_identity(grp.n)) return false;
    for (int s = 0; s < gamma.n; ++s)
      for (int t = 0; t < gamma.n; ++t)
        if (act[gamma.mul(s, t)] != perm_compose(act[s], act[t])) return false;
    return true;
  }
};

inline GammaGroup trivial_action(const FiniteGroup& gamma, const FiniteGroup& g) {
  GammaGroup gg{gamma, g, std::vector<Vec>(gamma.n, perm_identity(g.n))};
  return gg;
}

/// Action of Gamma through a single automorphism phi assigned to a chosen
/// gamma element (requires consistency; validated by the caller's tests).
inline GammaGroup action_from_hom(const FiniteGroup& gamma, const FiniteGroup& g,
                                  const std::vector<Vec>& perms) {
  return GammaGroup{gamma, g, perms};
}

/// Gamma-equivariant homomorphism between GammaGroups over the same Gamma.
struct GammaHom {
  GroupHom hom;

  bool equivariant(const GammaGroup& src, const GammaGroup& dst) const {
    for (int s = 0; s < src.gamma.n; ++s)
      for (int x = 0; x < src.grp.n; ++x)
        if (hom(src.apply(s, x)) != dst.apply(s, hom(x))) return false;
    return true;
  }
};

/// Fixed-point subgroup of the action, as a sorted element list.
inline Vec fixed_points(const GammaGroup& g) {
  Vec fix;
  for (int x = 0; x < g.grp.n; ++x) {
    bool f = true;
    for (int s = 1; s < g.gamma.n && f; ++s) f = g.apply(s, x) == x;
    if (f) fix.push_back(x);
  }
  return fix;
}

/// Is the subgroup (element list) stable under every act[s]?
inline bool action_stable(const GammaGroup& g, const Vec& elems) {
  std::vector<char> in(g.grp.n, 0);
  for (int e : elems) in[e] = 1;
  for (int s = 0; s < g.gamma.n; ++s)
    for (int e : elems)
      if (!in[g.apply(s, e)]) return false;
  return true;
}

/// Restriction of the action to a Gamma-stable subgroup, relabeled.
struct GammaSubgroup {
  GammaGroup sub;
  Vec elems;             // local -> ambient
  Vec ambient_to_local;  // -1 outside
};

inline GammaSubgroup gamma_subgroup(const GammaGroup& g, Vec elems) {
  SubgroupView sv = materialize_subgroup(g.grp, std::move(elems));
  if (!action_stable(g, sv.elems)) throw NotASubgroup("subgroup not Gamma-stable");
  std::vector<Vec> act(g.gamma.n, Vec(sv.grp.n));
  for (int s = 0; s < g.gamma.n; ++s)
    for (int i = 0; i < sv.grp.n; ++i)
      act[s][i] = sv.ambient_to_local[g.apply(s, sv.elems[i])];
  return GammaSubgroup{GammaGroup{g.gamma, sv.grp, act}, sv.elems, sv.ambient_to_local};
}

/// Quotient of the underlying group by a Gamma-stable normal subgroup, with
/// the induced action.
struct GammaQuotient {
  GammaGroup quot;
  GroupHom proj;
};

inline GammaQuotient gamma_quotient(const GammaGroup& g, Vec normal) {
  if (!action_stable(g, normal)) throw NotNormal("normal subgroup not Gamma-stable");
  QuotientView qv = quotient(g.grp, std::move(normal));
  std::vector<Vec> act(g.gamma.n, Vec(qv.grp.n));
  for (int s = 0; s < g.gamma.n; ++s)
    for (int i = 0; i < qv.grp.n; ++i)
      act[s][i] = qv.proj(g.apply(s, qv.cosets[i][0]));
  GammaGroup quot{g.gamma, qv.grp, act};
  return GammaQuotient{quot, qv.proj};
}

/// Restricts the operator group to a subgroup of Gamma (relabeled).
inline GammaGroup restrict_gamma(const GammaGroup& g, const Vec& gamma_elems) {
  SubgroupView sv = materialize_subgroup(g.gamma, gamma_elems);
  std::vector<Vec> act(sv.grp.n);
  for (int i = 0; i < sv.grp.n; ++i) act[i] = g.act[sv.elems[i]];
  return GammaGroup{sv.grp, g.grp, act};
}

}  // namespace qac

#endif
