#ifndef QAC_XMOD_HPP
#define QAC_XMOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "qac/gamma.hpp"

namespace qac {

/// Crossed module over Gamma: equivariant boundary F -> G plus a G-action on
/// F satisfying the two crossed-module identities.
struct CrossedModule {
  GammaGroup F;
  GammaGroup G;              // same gamma as F
  Vec boundary;              // F elt -> G elt
  std::vector<Vec> gact;     // per G element, a permutation of F

  int bd(int f) const { return boundary[f]; }
  int gapply(int g, int f) const { return gact[g][f]; }

  Vec boundary_image() const {
    Vec im = boundary;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  Vec boundary_kernel() const {
    Vec k;
    for (int f = 0; f < F.grp.n; ++f)
      if (boundary[f] == 0) k.push_back(f);
    return k;
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustive scan of the crossed-module axioms; every violated identity is
/// reported with a witness.
inline ValidationReport validate(const CrossedModule& cm) {
  ValidationReport r;
  auto& F = cm.F.grp;
  auto& G = cm.G.grp;
  auto note = [&](std::string s) {
    if (r.violations.size() < 64) r.violations.push_back(std::move(s));
  };

  if (!(cm.F.gamma == cm.G.gamma)) note("F and G have different operator groups");
  if (!cm.F.valid()) note("Gamma action on F is not an action by automorphisms");
  if (!cm.G.valid()) note("Gamma action on G is not an action by automorphisms");
  GroupHom bd{F, G, cm.boundary};
  if (!bd.valid()) note("boundary is not a homomorphism");

  if ((int)cm.gact.size() != G.n) {
    note("G-action table has wrong size");
    return r;
  }
  for (int g = 0; g < G.n; ++g)
    if (!is_automorphism(F, cm.gact[g]))
      note("gact[" + std::to_string(g) + "] is not an automorphism of F");
  for (int g = 0; g < G.n; ++g)
    for (int h = 0; h < G.n; ++h)
      if (cm.gact[G.mul(g, h)] != perm_compose(cm.gact[g], cm.gact[h])) {
        note("g -> gact[g] is not a homomorphism at (" + std::to_string(g) + "," +
             std::to_string(h) + ")");
        g = G.n;
        break;
      }
  if (!r.ok()) return r;

  // CM1: bd(^g f) = g bd(f) g^-1
  for (int g = 0; g < G.n; ++g)
    for (int f = 0; f < F.n; ++f)
      if (cm.bd(cm.gapply(g, f)) != G.conj(g, cm.bd(f)))
        note("CM1 fails at g=" + std::to_string(g) + " f=" + std::to_string(f));
  // CM2 (Peiffer): ^{bd f} f' = f f' f^-1
  for (int f = 0; f < F.n; ++f)
    for (int f2 = 0; f2 < F.n; ++f2)
      if (cm.gapply(cm.bd(f), f2) != F.conj(f, f2))
        note("CM2 fails at f=" + std::to_string(f) + " f'=" + std::to_string(f2));
  // boundary is Gamma-equivariant: s(bd f) = bd(s f)
  for (int s = 0; s < cm.F.gamma.n; ++s)
    for (int f = 0; f < F.n; ++f)
      if (cm.G.apply(s, cm.bd(f)) != cm.bd(cm.F.apply(s, f)))
        note("boundary not Gamma-equivariant at s=" + std::to_string(s) +
             " f=" + std::to_string(f));
  // Gamma-compatibility: s(^g f) = ^{s g}(s f)
  for (int s = 0; s < cm.F.gamma.n; ++s)
    for (int g = 0; g < G.n; ++g)
      for (int f = 0; f < F.n; ++f)
        if (cm.F.apply(s, cm.gapply(g, f)) != cm.gapply(cm.G.apply(s, g), cm.F.apply(s, f)))
          note("Gamma-compatibility fails at s=" + std::to_string(s) + " g=" + std::to_string(g) +
               " f=" + std::to_string(f));
  if (!r.ok()) return r;

  // consequences, rechecked for good measure
  Vec zf = center(F);
  for (int k : cm.boundary_kernel())
    if (std::find(zf.begin(), zf.end(), k) == zf.end())
      note("ker boundary not central in F at f=" + std::to_string(k));
  if (!is_normal(G, cm.boundary_image())) note("im boundary not normal in G");
  return r;
}

struct QuasiAbelianVerdict {
  bool zg_acts_trivially = false;   // (i)  Z(G) acts trivially on F
  bool image_center_cover = false;  // (ii) G = im(bd) . Z(G)
  bool dz_surjective = false;       // (iii) Z(F) ->> Z(im bd)
  bool all() const { return zg_acts_trivially && image_center_cover && dz_surjective; }
};

inline QuasiAbelianVerdict is_quasi_abelian(const CrossedModule& cm) {
  QuasiAbelianVerdict v;
  auto& G = cm.G.grp;
  Vec zg = center(G);
  v.zg_acts_trivially = true;
  for (int z : zg)
    for (int f = 0; f < cm.F.grp.n && v.zg_acts_trivially; ++f)
      if (cm.gapply(z, f) != f) v.zg_acts_trivially = false;

  Vec im = cm.boundary_image();
  std::vector<char> hit(G.n, 0);
  for (int a : im)
    for (int z : zg) hit[G.mul(a, z)] = 1;
  v.image_center_cover = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  // Z(im bd) computed inside the image subgroup
  SubgroupView imv = materialize_subgroup(G, im);
  Vec zim_local = center(imv.grp);
  std::vector<char> reached(G.n, 0);
  Vec zf = center(cm.F.grp);
  for (int f : zf) reached[cm.bd(f)] = 1;
  v.dz_surjective = true;
  for (int zl : zim_local)
    if (!reached[imv.elems[zl]]) v.dz_surjective = false;
  return v;
}

/// The abelian crossed module Z(F) -> Z(G) induced by the boundary, with both
/// centers materialized as standalone Gamma-modules.
struct CenterComplex {
  GammaSubgroup ZF;  // inside F
  GammaSubgroup ZG;  // inside G
  Vec dz;            // local ZF index -> local ZG index

  int dZ(int a) const { return dz[a]; }
};

inline CenterComplex center_complex(const CrossedModule& cm) {
  QuasiAbelianVerdict v = is_quasi_abelian(cm);
  if (!v.zg_acts_trivially || !v.image_center_cover)
    throw NotCentrable("center complex needs Z(G) acting trivially and G = im(bd).Z(G)");
  CenterComplex cc;
  cc.ZF = gamma_subgroup(cm.F, center(cm.F.grp));
  cc.ZG = gamma_subgroup(cm.G, center(cm.G.grp));
  cc.dz.resize(cc.ZF.sub.grp.n);
  for (int i = 0; i < cc.ZF.sub.grp.n; ++i) {
    int img = cm.bd(cc.ZF.elems[i]);
    int loc = cc.ZG.ambient_to_local[img];
    if (loc < 0) throw NotCentrable("boundary of a central element is not central in G");
    cc.dz[i] = loc;
  }
  return cc;
}

/// Morphism of crossed modules.
struct XModMorphism {
  const CrossedModule* src;
  const CrossedModule* dst;
  Vec fmap;  // F1 -> F2
  Vec gmap;  // G1 -> G2

  bool valid() const {
    GroupHom f{src->F.grp, dst->F.grp, fmap}, g{src->G.grp, dst->G.grp, gmap};
    if (!f.valid() || !g.valid()) return false;
    if (!GammaHom{f}.equivariant(src->F, dst->F)) return false;
    if (!GammaHom{g}.equivariant(src->G, dst->G)) return false;
    for (int x = 0; x < src->F.grp.n; ++x)
      if (gmap[src->bd(x)] != dst->bd(fmap[x])) return false;
    for (int gg = 0; gg < src->G.grp.n; ++gg)
      for (int x = 0; x < src->F.grp.n; ++x)
        if (fmap[src->gapply(gg, x)] != dst->gapply(gmap[gg], fmap[x])) return false;
    return true;
  }
};

/// A center complex as a crossed module in its own right (trivial G-action:
/// Z(G) acts trivially on Z(F) whenever the complex is defined).
inline CrossedModule as_crossed_module(const CenterComplex& cc) {
  CrossedModule cm;
  cm.F = cc.ZF.sub;
  cm.G = cc.ZG.sub;
  cm.boundary = cc.dz;
  cm.gact.assign(cm.G.grp.n, perm_identity(cm.F.grp.n));
  return cm;
}

/// The embedding (Z(F) -> Z(G)) into (F -> G).
inline XModMorphism embedding_morphism(const CrossedModule& cm, const CenterComplex& cc,
                                       const CrossedModule& center_cm) {
  XModMorphism m;
  m.src = &center_cm;
  m.dst = &cm;
  m.fmap = cc.ZF.elems;
  m.gmap = cc.ZG.elems;
  return m;
}

/// Kernel and cokernel of the boundary, as standalone groups.
struct KerCoker {
  SubgroupView ker;    // inside F
  QuotientView coker;  // G / im
};

inline KerCoker ker_coker(const CrossedModule& cm) {
  KerCoker kc;
  kc.ker = materialize_subgroup(cm.F.grp, cm.boundary_kernel());
  kc.coker = quotient(cm.G.grp, cm.boundary_image());
  return kc;
}

/// True iff the induced maps ker bd1 -> ker bd2 and coker bd1 -> coker bd2
/// are bijective.
inline bool is_quasi_isomorphism(const XModMorphism& m) {
  if (!m.valid()) return false;
  KerCoker a = ker_coker(*m.src), b = ker_coker(*m.dst);
  // induced on kernels
  if (a.ker.grp.n != b.ker.grp.n) return false;
  std::vector<char> seen(b.ker.grp.n, 0);
  for (int k : a.ker.elems) {
    int img = b.ker.ambient_to_local[m.fmap[k]];
    if (img < 0) return false;  // does not even map kernel into kernel
    if (seen[img]++) return false;
  }
  // induced on cokernels
  if (a.coker.grp.n != b.coker.grp.n) return false;
  Vec induced(a.coker.grp.n, -1);
  for (int g = 0; g < m.src->G.grp.n; ++g) {
    int c1 = a.coker.proj(g), c2 = b.coker.proj(m.gmap[g]);
    if (induced[c1] >= 0 && induced[c1] != c2) return false;
    induced[c1] = c2;
  }
  std::vector<char> seen2(b.coker.grp.n, 0);
  for (int v : induced) {
    if (v < 0) return false;
    if (seen2[v]++) return false;
  }
  return true;
}

/// The isomorphism Inn(F) -> Inn(G) induced by the boundary of a
/// quasi-abelian crossed module.
struct InnIso {
  QuotientView innF, innG;
  Vec map;      // Inn(F) -> Inn(G)
  Vec inv_map;  // Inn(G) -> Inn(F)
};

inline InnIso inn_iso(const CrossedModule& cm) {
  if (!is_quasi_abelian(cm).all()) throw NotQuasiAbelian("inn_iso");
  InnIso ii;
  ii.innF = inn_quotient(cm.F.grp);
  ii.innG = inn_quotient(cm.G.grp);
  ii.map.assign(ii.innF.grp.n, -1);
  for (int f = 0; f < cm.F.grp.n; ++f) {
    int c1 = ii.innF.proj(f), c2 = ii.innG.proj(cm.bd(f));
    if (ii.map[c1] >= 0 && ii.map[c1] != c2)
      throw NotQuasiAbelian("boundary does not descend to central quotients");
    ii.map[c1] = c2;
  }
  std::vector<char> seen(ii.innG.grp.n, 0);
  for (int v : ii.map) {
    if (v < 0 || seen[v]++) throw NotQuasiAbelian("induced map on Inn not bijective");
  }
  if (ii.innF.grp.n != ii.innG.grp.n) throw NotQuasiAbelian("Inn orders differ");
  ii.inv_map.assign(ii.innG.grp.n, -1);
  for (int i = 0; i < (int)ii.map.size(); ++i) ii.inv_map[ii.map[i]] = i;
  return ii;
}

/// Remark-3.6-style derived predicate: quasi-isomorphic to its center in the
/// sense of the center of a crossed module (fixed part of Z(F), stabilizer
/// part of Z(G)). Returns nullopt when the candidate center is not even a
/// subcomplex.
inline std::optional<bool> quasi_isomorphic_to_center(const CrossedModule& cm) {
  auto& F = cm.F.grp;
  auto& G = cm.G.grp;
  Vec zf = center(F);
  Vec zf_fixed;  // Z(F) ^ G
  for (int z : zf) {
    bool fixed = true;
    for (int g = 0; g < G.n && fixed; ++g) fixed = cm.gapply(g, z) == z;
    if (fixed) zf_fixed.push_back(z);
  }
  Vec zg = center(G);
  Vec zg_st;  // Z(G) acting trivially on F
  for (int z : zg) {
    bool triv = true;
    for (int f = 0; f < F.n && triv; ++f) triv = cm.gapply(z, f) == f;
    if (triv) zg_st.push_back(z);
  }
  std::vector<char> in_st(G.n, 0);
  for (int z : zg_st) in_st[z] = 1;
  for (int z : zf_fixed)
    if (!in_st[cm.bd(z)]) return std::nullopt;  // boundary does not restrict
  if (!action_stable(cm.F, zf_fixed) || !action_stable(cm.G, zg_st)) return std::nullopt;

  CrossedModule cen;
  GammaSubgroup a = gamma_subgroup(cm.F, zf_fixed), b = gamma_subgroup(cm.G, zg_st);
  cen.F = a.sub;
  cen.G = b.sub;
  cen.boundary.resize(cen.F.grp.n);
  for (int i = 0; i < cen.F.grp.n; ++i) cen.boundary[i] = b.ambient_to_local[cm.bd(a.elems[i])];
  cen.gact.assign(cen.G.grp.n, perm_identity(cen.F.grp.n));
  XModMorphism m;
  m.src = &cen;
  m.dst = &cm;
  m.fmap = a.elems;
  m.gmap = b.elems;
  if (!m.valid()) return std::nullopt;
  return is_quasi_isomorphism(m);
}

}  // namespace qac

#endif
