#ifndef QAC_ABMAP_HPP
#define QAC_ABMAP_HPP

#include <string>
#include <vector>

#include "qac/abcoh.hpp"
#include "qac/nacoh.hpp"

namespace qac {

/// Everything the main-sequence verification needs, computed once.
/// The bridge phi_i between hyper classes (a,b) and crossed-module classes is
/// (a,b) -> (b^-1, a); the sign is pinned by the commuting-square checks
/// (check_lemma316, check_prop37) together with the degeneration oracles.
struct AbmapSets {
  CrossedModule cm;
  CenterComplex cc;
  XmodSets X;
  LongSequence L;
  KambSequence K;
  LienSet lienF, lienG;
  CohMap phi0, phi1;
  bool phi0_bijective = false, phi1_bijective = false;
  CohMap ab0, ab1;
  CohMap delta0;    // H0_ab -> H1(F)
  CohMap delta1;    // H1_ab -> h2_lien(F)
  CohMap partial2;  // h2_lien(F) -> h2_lien(G)
  bool partial2_well_defined = false;
  CohMap ab2, t_map;
  bool t_equals_c2 = false;

  const CohMap& pi1() const { return L.maps[4]; }
  const CohMap& j1() const { return L.maps[3]; }
  const CohMap& j2() const { return L.maps[6]; }
  const CohMap& pi2() const { return L.maps[7]; }
  const CohMap& dz3() const { return L.maps[8]; }
};

namespace detail {

inline Vec hyper_to_xmod_pair(const CenterComplex& cc, const FiniteGroup& G,
                              const HyperGroup& H, const Vec& rep) {
  Vec a = H.a_part(rep), b = H.b_part(rep);
  Vec pair;
  pair.reserve(a.size() + b.size());
  for (int v : b) pair.push_back(G.inv[cc.ZG.elems[v]]);
  for (int v : a) pair.push_back(cc.ZF.elems[v]);
  return pair;
}

}  // namespace detail

inline AbmapSets abmap_sets(const CrossedModule& cm, const Budget& budget = {}) {
  if (!is_quasi_abelian(cm).all()) throw NotQuasiAbelian("abmap_sets");
  AbmapSets A;
  A.cm = cm;
  A.cc = center_complex(cm);
  A.X = xmod_sets(cm, budget);
  A.L = les_long(A.cc, budget);
  A.K = les_kamb(cm, A.cc, budget);
  A.lienF = h2_lien(cm.F, budget);
  A.lienG = h2_lien(cm.G, budget);
  int gn = cm.F.gamma.n;
  const FiniteGroup& G = cm.G.grp;

  // phi_0 and phi_1
  A.phi0.label = "phi0";
  A.phi0.src = A.L.Hab[0].as_pointed("H0_ab");
  A.phi0.dst = A.X.h0cm.as_pointed("H0_cm");
  for (const auto& rep : A.L.Hab[0].reps)
    A.phi0.images.push_back(
        A.X.h0cm.class_of(detail::hyper_to_xmod_pair(A.cc, G, A.L.Hab[0], rep)));
  A.phi0_bijective =
      injective(A.phi0) && A.phi0.src.size == A.phi0.dst.size;

  A.phi1.label = "phi1";
  A.phi1.src = A.L.Hab[1].as_pointed("H1_ab");
  A.phi1.dst = A.X.h1cm.as_pointed("H1_cm");
  for (const auto& rep : A.L.Hab[1].reps)
    A.phi1.images.push_back(
        A.X.h1cm.class_of(detail::hyper_to_xmod_pair(A.cc, G, A.L.Hab[1], rep)));
  A.phi1_bijective =
      injective(A.phi1) && A.phi1.src.size == A.phi1.dst.size;
  if (!A.phi0_bijective || !A.phi1_bijective)
    throw std::runtime_error("phi maps are not bijections; convention broken");

  Vec phi0_inv(A.phi0.dst.size), phi1_inv(A.phi1.dst.size);
  for (int i = 0; i < (int)A.phi0.images.size(); ++i) phi0_inv[A.phi0(i)] = i;
  for (int i = 0; i < (int)A.phi1.images.size(); ++i) phi1_inv[A.phi1(i)] = i;

  // ab_i = phi_i^-1 o psi_i
  A.ab0.label = "ab0";
  A.ab0.src = A.X.h0G.as_pointed("H0_G");
  A.ab0.dst = A.L.Hab[0].as_pointed("H0_ab");
  for (int g : A.X.h0G.elems) {
    Vec pair(1 + gn, 0);
    pair[0] = g;
    A.ab0.images.push_back(phi0_inv[A.X.h0cm.class_of(pair)]);
  }
  A.ab1.label = "ab1";
  A.ab1.src = A.X.h1G.as_pointed("H1_G");
  A.ab1.dst = A.L.Hab[1].as_pointed("H1_ab");
  for (const auto& rep : A.X.h1G.reps) {
    Vec pair(gn + gn * gn, 0);
    for (int s = 0; s < gn; ++s) pair[s] = rep[s];
    A.ab1.images.push_back(phi1_inv[A.X.h1cm.class_of(pair)]);
  }

  // delta_0: forget b, keep the F-valued 1-cocycle
  A.delta0.label = "delta0";
  A.delta0.src = A.L.Hab[0].as_pointed("H0_ab");
  A.delta0.dst = A.X.h1F.as_pointed("H1_F");
  for (const auto& rep : A.L.Hab[0].reps) {
    Vec a = A.L.Hab[0].a_part(rep);
    for (int& v : a) v = A.cc.ZF.elems[v];
    A.delta0.images.push_back(A.X.h1F.class_of(a));
  }

  // delta_1(y) = pi1(y) . eps_F
  A.delta1.label = "delta1";
  A.delta1.src = A.L.Hab[1].as_pointed("H1_ab");
  A.delta1.dst = A.lienF.as_pointed("H2_lienF");
  for (int y = 0; y < A.L.Hab[1].size(); ++y)
    A.delta1.images.push_back(
        act_h2(A.lienF, A.L.HZF[2], A.cc.ZF.elems, A.pi1()(y), A.lienF.eps));

  // partial2 on lien classes, with exhaustive well-definedness check
  A.partial2.label = "partial2";
  A.partial2.src = A.lienF.as_pointed("H2_lienF");
  A.partial2.dst = A.lienG.as_pointed("H2_lienG");
  auto push2 = [&](const Vec& pair) {
    Vec im(gn + gn * gn);
    for (int s = 0; s < gn; ++s)
      im[s] = A.lienG.inn.proj(cm.bd(A.lienF.inn_lift[pair[s]]));
    for (int i = 0; i < gn * gn; ++i) im[gn + i] = cm.bd(pair[gn + i]);
    return A.lienG.class_of(im);
  };
  for (const auto& rep : A.lienF.reps) A.partial2.images.push_back(push2(rep));
  A.partial2_well_defined = true;
  for (const auto& [coc, cls] : A.lienF.cocycle_class)
    if (push2(coc) != A.partial2(cls)) A.partial2_well_defined = false;

  // ab2 via the unique translate of eps_G; t = t_ab2 o ab2 = c2
  A.ab2.label = "ab2";
  A.ab2.src = A.lienG.as_pointed("H2_lienG");
  A.ab2.dst = A.L.Hab[2].as_pointed("H2_ab");
  A.t_map.label = "t";
  A.t_map.src = A.ab2.src;
  A.t_map.dst = A.K.Hcoker[2].as_pointed("H2_coker");
  Vec zg_to_coker(A.cc.ZG.sub.grp.n);
  for (int i = 0; i < A.cc.ZG.sub.grp.n; ++i)
    zg_to_coker[i] = A.K.coker.proj(A.cc.ZG.elems[i]);
  const CohMap& t_ab2 = A.K.maps[7];
  A.t_equals_c2 = true;
  for (int s = 0; s < A.lienG.size(); ++s) {
    int x = -1;
    for (int cand = 0; cand < A.L.HZG[2].size(); ++cand)
      if (act_h2(A.lienG, A.L.HZG[2], A.cc.ZG.elems, cand, A.lienG.eps) == s) {
        if (x >= 0) throw NoUniqueTranslate("two translates reach the same class");
        x = cand;
      }
    if (x < 0) throw NoUniqueTranslate("class not reachable from eps");
    A.ab2.images.push_back(A.j2()(x));
    int t = t_ab2(A.ab2(s));
    A.t_map.images.push_back(t);
    int c2 = A.K.Hcoker[2].class_of(detail::push_values(A.L.HZG[2].reps[x], zg_to_coker));
    if (t != c2) A.t_equals_c2 = false;
  }
  return A;
}

struct Lemma316Verdict {
  bool commutes = false;  // pi1 o ab1 = dF o btilde1
  bool big_commutes = false;  // dzZ2 o dF = dG o dbar1
};

inline Lemma316Verdict check_lemma316(const AbmapSets& A, const Budget& budget = {}) {
  Lemma316Verdict v;
  InnIso ii = inn_iso(A.cm);
  InnLadder IF = inn_ladder(A.cm.F, A.lienF, budget);
  InnLadder IG = inn_ladder(A.cm.G, A.lienG, budget);
  int gn = A.cm.F.gamma.n;
  // dbar1: H1(Inn F) -> H1(Inn G) through the boundary-induced isomorphism
  CohMap dbar1;
  dbar1.label = "dbar1";
  dbar1.src = IF.h1Inn.as_pointed("H1_InnF");
  dbar1.dst = IG.h1Inn.as_pointed("H1_InnG");
  for (const auto& rep : IF.h1Inn.reps) {
    Vec im(gn);
    for (int s = 0; s < gn; ++s) im[s] = ii.map[rep[s]];
    dbar1.images.push_back(IG.h1Inn.class_of(im));
  }
  if (!injective(dbar1) || dbar1.src.size != dbar1.dst.size)
    throw NotQuasiAbelian("induced H1(Inn) map not bijective");
  Vec dbar1_inv(dbar1.dst.size);
  for (int i = 0; i < (int)dbar1.images.size(); ++i) dbar1_inv[dbar1(i)] = i;

  v.commutes = true;
  for (int q = 0; q < A.X.h1G.size(); ++q) {
    int btilde = dbar1_inv[IG.b1(q)];
    if (A.pi1()(A.ab1(q)) != IF.d(btilde)) v.commutes = false;
  }
  // the (big) square: dz2 o dF = dG o dbar1
  const CohMap& dz2 = A.L.maps[5];
  v.big_commutes = true;
  for (int x = 0; x < IF.h1Inn.size(); ++x)
    if (dz2(IF.d(x)) != IG.d(dbar1(x))) v.big_commutes = false;
  return v;
}

struct Theorem42Report {
  SequenceReport seq;
  bool first_injective = false;
  bool group_homs = false;  // maps between groups are homomorphisms
  std::vector<std::string> failures;
  bool all_pass() const {
    return first_injective && group_homs && seq.all_pass() && failures.empty();
  }
};

inline Theorem42Report theorem42(const AbmapSets& A) {
  Theorem42Report R;
  const CrossedModule& cm = A.cm;
  int gn = cm.F.gamma.n;

  CohMap inc;
  inc.label = "i";
  inc.src = A.X.hm1.as_pointed("Hm1_cm");
  inc.dst = A.X.h0F.as_pointed("H0_F");
  for (const auto& rep : A.X.hm1.reps)
    inc.images.push_back(A.X.h0F.class_of(A.X.ker.elems[rep[0]]));

  CohMap bd0;
  bd0.label = "partial0";
  bd0.src = A.X.h0F.as_pointed("H0_F");
  bd0.dst = A.X.h0G.as_pointed("H0_G");
  for (int f : A.X.h0F.elems) bd0.images.push_back(A.X.h0G.class_of(cm.bd(f)));

  CohMap bd1;
  bd1.label = "partial1";
  bd1.src = A.X.h1F.as_pointed("H1_F");
  bd1.dst = A.X.h1G.as_pointed("H1_G");
  for (const auto& rep : A.X.h1F.reps) {
    Vec im(gn);
    for (int s = 0; s < gn; ++s) im[s] = cm.bd(rep[s]);
    bd1.images.push_back(A.X.h1G.class_of(im));
  }

  R.seq.maps = {inc,       bd0,        A.ab0, A.delta0, bd1,     A.ab1,
                A.delta1,  A.partial2, A.ab2, A.pi2(),  A.dz3()};
  R.first_injective = injective(inc);

  for (size_t k = 0; k + 1 < R.seq.maps.size(); ++k) {
    const std::string& at = R.seq.maps[k].dst.label;
    if (at == "H1_ab") continue;  // criterion below instead
    R.seq.joints.push_back({at, exact_at(R.seq.maps[k], R.seq.maps[k + 1])});
  }
  // im(ab1) = { y : delta1(y) neutral }
  {
    std::vector<char> im(A.ab1.dst.size, 0), crit(A.ab1.dst.size, 0);
    for (int v : A.ab1.images) im[v] = 1;
    for (int y = 0; y < A.ab1.dst.size; ++y)
      crit[y] = A.lienF.is_neutral(A.delta1(y));
    R.seq.ab1_image_criterion = std::equal(im.begin(), im.end(), crit.begin());
  }
  // partial2 maps neutral classes into neutral classes
  {
    bool ok = true;
    for (int c : A.lienF.neutral_classes)
      if (!A.lienG.is_neutral(A.partial2(c))) ok = false;
    R.seq.neutral_preserved = ok;
  }
  // group homomorphisms on the group-valued stretches
  R.group_homs = true;
  for (int i = 0; i < A.X.hm1.size(); ++i)
    for (int j = 0; j < A.X.hm1.size(); ++j) {
      int sum = A.X.hm1.add(i, j);
      int fi = A.X.hm1.reps[i][0], fj = A.X.hm1.reps[j][0];
      int prod = A.X.ker.sub.grp.mul(fi, fj);
      if (inc(sum) != A.X.h0F.class_of(A.X.ker.elems[prod])) R.group_homs = false;
    }
  for (size_t i = 0; i < A.X.h0G.elems.size(); ++i)
    for (size_t j = 0; j < A.X.h0G.elems.size(); ++j) {
      int prod = A.X.h0G.class_of(cm.G.grp.mul(A.X.h0G.elems[i], A.X.h0G.elems[j]));
      if (A.ab0(prod) != A.L.Hab[0].add(A.ab0((int)i), A.ab0((int)j)))
        R.group_homs = false;
    }
  for (int i = 0; i < A.L.Hab[2].size(); ++i)
    for (int j = 0; j < A.L.Hab[2].size(); ++j)
      if (A.pi2()(A.L.Hab[2].add(i, j)) != A.L.HZF[3].add(A.pi2()(i), A.pi2()(j)))
        R.group_homs = false;

  for (const auto& j : R.seq.joints)
    if (!j.exact) R.failures.push_back("not exact at " + j.at);
  if (R.seq.ab1_image_criterion && !*R.seq.ab1_image_criterion)
    R.failures.push_back("ab1-image criterion fails at H1_ab");
  if (R.seq.neutral_preserved && !*R.seq.neutral_preserved)
    R.failures.push_back("partial2 does not preserve neutrality");
  return R;
}

struct Cor45Verdict {
  bool hypothesis_met = false;  // every class of h2_lien(F) neutral
  bool ab1_surjective = false;
  bool ab2_detects_neutral = false;  // s neutral <=> ab2(s) = 0
  bool pass() const {
    return !hypothesis_met || (ab1_surjective && ab2_detects_neutral);
  }
};

inline Cor45Verdict cor45_predicate(const AbmapSets& A) {
  Cor45Verdict v;
  v.hypothesis_met = (int)A.lienF.neutral_classes.size() == A.lienF.size();
  if (!v.hypothesis_met) return v;
  std::vector<char> im(A.ab1.dst.size, 0);
  for (int y : A.ab1.images) im[y] = 1;
  v.ab1_surjective = std::all_of(im.begin(), im.end(), [](char c) { return c != 0; });
  v.ab2_detects_neutral = true;
  for (int s = 0; s < A.lienG.size(); ++s)
    if (A.lienG.is_neutral(s) != (A.ab2(s) == 0)) v.ab2_detects_neutral = false;
  return v;
}

/// Lemma 4.4 chain: partial2(neutral F) <= neutral G <= ker ab2 = im partial2.
inline bool check_lemma44(const AbmapSets& A) {
  for (int c : A.lienF.neutral_classes)
    if (!A.lienG.is_neutral(A.partial2(c))) return false;
  std::vector<char> ker(A.lienG.size(), 0), im(A.lienG.size(), 0);
  for (int s = 0; s < A.lienG.size(); ++s) ker[s] = A.ab2(s) == 0;
  for (int v : A.partial2.images) im[v] = 1;
  for (int s = 0; s < A.lienG.size(); ++s) {
    if (A.lienG.is_neutral(s) && !ker[s]) return false;
    if (ker[s] != im[s]) return false;
  }
  return true;
}

/// The (comp) square: partial2(x . s) = dz2(x) . partial2(s).
inline bool check_comp(const AbmapSets& A) {
  const CohMap& dz2 = A.L.maps[5];
  for (int x = 0; x < A.L.HZF[2].size(); ++x)
    for (int s = 0; s < A.lienF.size(); ++s) {
      int lhs = A.partial2(act_h2(A.lienF, A.L.HZF[2], A.cc.ZF.elems, x, s));
      int rhs = act_h2(A.lienG, A.L.HZG[2], A.cc.ZG.elems, dz2(x), A.partial2(s));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace qac

#endif
