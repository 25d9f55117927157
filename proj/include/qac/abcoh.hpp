#ifndef QAC_ABCOH_HPP
#define QAC_ABCOH_HPP

#include <map>
#include <string>
#include <vector>

#include "qac/cochain.hpp"
#include "qac/pointed.hpp"
#include "qac/xmod.hpp"

namespace qac {

/// H^n(Gamma, A) for an abelian Gamma-module, computed by full enumeration of
/// normalized cochains. Canonical class representative = lexicographically
/// least cocycle in the class.
struct CohGroup {
  GammaGroup mod;
  int degree = 0;
  std::vector<Vec> reps;  // sorted; reps[0] is the zero class
  std::vector<Vec> cobs;  // every coboundary
  Vec addtab;
  std::map<Vec, int> rep_index;

  int size() const { return (int)reps.size(); }

  Vec canonical(const Vec& c) const {
    Vec best;
    for (const auto& b : cobs) {
      Vec cand = cochain_add(mod.grp, c, b);
      if (best.empty() || cand < best) best = cand;
    }
    return best;
  }

  int class_of(const Vec& c) const { return rep_index.at(canonical(c)); }

  int add(int i, int j) const { return addtab[i * size() + j]; }

  int neg(int i) const { return class_of(cochain_neg(mod.grp, reps[i])); }

  PointedSet as_pointed(const std::string& label) const {
    return PointedSet{label, size(), 0, std::nullopt, true};
  }
};

inline CohGroup cohomology(const GammaGroup& A, int degree, const Budget& budget = {}) {
  if (!A.grp.is_abelian()) throw std::runtime_error("cohomology: module must be abelian");
  CohGroup H;
  H.mod = A;
  H.degree = degree;
  if (degree < 0) {  // conventionally zero
    H.reps = {Vec{}};
    H.cobs = {Vec{}};
    H.addtab = {0};
    H.rep_index[Vec{}] = 0;
    return H;
  }
  // coboundaries
  std::vector<Vec> cobs;
  if (degree == 0) {
    cobs.push_back(cochain_zero(A.gamma.n, 0));
  } else {
    for_each_cochain(A, degree - 1, budget,
                     [&](const Vec& c) { cobs.push_back(diff(A, degree - 1, c)); });
    std::sort(cobs.begin(), cobs.end());
    cobs.erase(std::unique(cobs.begin(), cobs.end()), cobs.end());
  }
  H.cobs = cobs;
  // cocycles, grouped by canonical form
  std::map<Vec, int> seen;
  for_each_cochain(A, degree, budget, [&](const Vec& c) {
    if (!cochain_is_zero(diff(A, degree, c))) return;
    Vec canon = H.canonical(c);
    if (!seen.count(canon)) seen[canon] = 1;
  });
  for (auto& [rep, _] : seen) H.reps.push_back(rep);  // std::map is sorted; zero rep first
  for (int i = 0; i < (int)H.reps.size(); ++i) H.rep_index[H.reps[i]] = i;
  int m = H.size();
  H.addtab.resize(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      H.addtab[i * m + j] = H.class_of(cochain_add(A.grp, H.reps[i], H.reps[j]));
  return H;
}

/// Hypercohomology of the center complex Z(F) -> Z(G) via the total complex
/// Tot^n = C^{n+1}(Gamma, ZF) + C^n(Gamma, ZG),
/// D(a,b) = (-delta a, dZ(a) + delta b).
/// A class is stored as the concatenation a|b.
struct HyperGroup {
  GammaGroup ZF, ZG;
  Vec dz;  // ZF -> ZG
  int degree = 0;
  long long a_len = 0, b_len = 0;
  std::vector<Vec> reps;
  std::vector<Vec> cobs;
  Vec addtab;
  std::map<Vec, int> rep_index;

  int size() const { return (int)reps.size(); }

  Vec pair_add(const Vec& x, const Vec& y) const {
    Vec r(x.size());
    for (long long i = 0; i < a_len; ++i) r[i] = ZF.grp.mul(x[i], y[i]);
    for (long long i = a_len; i < (long long)x.size(); ++i) r[i] = ZG.grp.mul(x[i], y[i]);
    return r;
  }

  Vec pair_neg(const Vec& x) const {
    Vec r(x.size());
    for (long long i = 0; i < a_len; ++i) r[i] = ZF.grp.inv[x[i]];
    for (long long i = a_len; i < (long long)x.size(); ++i) r[i] = ZG.grp.inv[x[i]];
    return r;
  }

  Vec a_part(const Vec& x) const { return Vec(x.begin(), x.begin() + a_len); }
  Vec b_part(const Vec& x) const { return Vec(x.begin() + a_len, x.end()); }

  Vec canonical(const Vec& c) const {
    Vec best;
    for (const auto& b : cobs) {
      Vec cand = pair_add(c, b);
      if (best.empty() || cand < best) best = cand;
    }
    return best;
  }

  int class_of(const Vec& c) const { return rep_index.at(canonical(c)); }
  int class_of(const Vec& a, const Vec& b) const {
    Vec c = a;
    c.insert(c.end(), b.begin(), b.end());
    return class_of(c);
  }

  int add(int i, int j) const { return addtab[i * size() + j]; }
  int neg(int i) const { return class_of(pair_neg(reps[i])); }

  PointedSet as_pointed(const std::string& label) const {
    return PointedSet{label, size(), 0, std::nullopt, true};
  }
};

namespace detail {

inline Vec push_values(const Vec& c, const Vec& valmap) {
  Vec r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = valmap[c[i]];
  return r;
}

}  // namespace detail

inline HyperGroup hypercohomology(const GammaGroup& ZF, const GammaGroup& ZG, const Vec& dz,
                                  int degree, const Budget& budget = {}) {
  HyperGroup H;
  H.ZF = ZF;
  H.ZG = ZG;
  H.dz = dz;
  H.degree = degree;
  int gn = ZF.gamma.n;
  H.a_len = degree + 1 >= 0 ? cochain_size(gn, degree + 1) : 0;
  H.b_len = degree >= 0 ? cochain_size(gn, degree) : 0;

  auto is_cocycle = [&](const Vec& a, const Vec& b) {
    if (!cochain_is_zero(diff(ZF, degree + 1, a))) return false;
    Vec t = detail::push_values(a, dz);
    if (degree >= 0) t = cochain_add(ZG.grp, t, diff(ZG, degree, b));
    return cochain_is_zero(t);
  };

  auto pair_budget = [&](int fdeg, int gdeg) {
    long long xf = fdeg >= 0 ? (long long)free_positions(gn, fdeg).size() : 0;
    long long yf = gdeg >= 0 ? (long long)free_positions(gn, gdeg).size() : 0;
    long long ex = ipow_sat(ZF.grp.n, xf), ey = ipow_sat(ZG.grp.n, yf);
    long long est = (ex < 0 || ey < 0 || (ey != 0 && ex > budget.limit / ey)) ? -1 : ex * ey;
    budget.require(est);
  };

  // coboundaries D(x,y), (x,y) in Tot^{n-1}
  std::vector<Vec> cobs;
  if (degree == -1) {
    cobs.push_back(Vec(H.a_len, 0));  // Tot^{-2} = 0
  } else {
    pair_budget(degree, degree - 1);
    for_each_cochain(ZF, degree, budget, [&](const Vec& x) {
      Vec da = cochain_neg(ZF.grp, diff(ZF, degree, x));
      Vec dzx = detail::push_values(x, dz);
      if (degree - 1 >= 0) {
        for_each_cochain(ZG, degree - 1, budget, [&](const Vec& y) {
          Vec b = cochain_add(ZG.grp, dzx, diff(ZG, degree - 1, y));
          Vec cb = da;
          cb.insert(cb.end(), b.begin(), b.end());
          cobs.push_back(cb);
        });
      } else {
        Vec cb = da;
        if (degree >= 0) cb.insert(cb.end(), dzx.begin(), dzx.end());
        cobs.push_back(cb);
      }
    });
    std::sort(cobs.begin(), cobs.end());
    cobs.erase(std::unique(cobs.begin(), cobs.end()), cobs.end());
  }
  H.cobs = cobs;

  std::map<Vec, int> seen;
  pair_budget(degree + 1, degree);
  for_each_cochain(ZF, degree + 1, budget, [&](const Vec& a) {
    if (degree >= 0) {
      for_each_cochain(ZG, degree, budget, [&](const Vec& b) {
        if (!is_cocycle(a, b)) return;
        Vec c = a;
        c.insert(c.end(), b.begin(), b.end());
        Vec canon = H.canonical(c);
        seen.emplace(canon, 1);
      });
    } else {
      if (!is_cocycle(a, {})) return;
      seen.emplace(H.canonical(a), 1);
    }
  });
  for (auto& [rep, _] : seen) H.reps.push_back(rep);
  for (int i = 0; i < (int)H.reps.size(); ++i) H.rep_index[H.reps[i]] = i;
  int m = H.size();
  H.addtab.resize(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) H.addtab[i * m + j] = H.class_of(H.pair_add(H.reps[i], H.reps[j]));
  return H;
}

inline HyperGroup hypercohomology(const CenterComplex& cc, int degree,
                                  const Budget& budget = {}) {
  return hypercohomology(cc.ZF.sub, cc.ZG.sub, cc.dz, degree, budget);
}

// ---------------------------------------------------------------------------
// The long exact sequence (long):
//   ... -> H^i(Z(G)) -j-> H^i_ab -pi-> H^{i+1}(Z(F)) -dz-> H^{i+1}(Z(G)) -> ...
// ---------------------------------------------------------------------------

struct LongSequence {
  std::vector<CohGroup> HZF;     // degrees 0..3
  std::vector<CohGroup> HZG;     // degrees 0..3
  std::vector<HyperGroup> Hab;   // degrees 0..2
  std::vector<CohMap> maps;      // j0, pi0, dz1, j1, pi1, dz2, j2, pi2, dz3
  std::vector<JointVerdict> joints;

  bool exact() const {
    for (auto& j : joints)
      if (!j.exact) return false;
    return true;
  }
};

inline CohMap j_map(const CohGroup& HZGi, const HyperGroup& Habi, int i) {
  CohMap m;
  m.label = "j" + std::to_string(i);
  m.src = HZGi.as_pointed("H" + std::to_string(i) + "_ZG");
  m.dst = Habi.as_pointed("H" + std::to_string(i) + "_ab");
  // j(z) = [(0, -z)]: the sign is pinned by ab1(p.q) = j(p) + ab1(q)
  for (const auto& b : HZGi.reps)
    m.images.push_back(Habi.class_of(cochain_zero(Habi.ZF.gamma.n, i + 1),
                                     cochain_neg(Habi.ZG.grp, b)));
  return m;
}

inline CohMap pi_map(const HyperGroup& Habi, const CohGroup& HZFn, int i) {
  CohMap m;
  m.label = "pi" + std::to_string(i);
  m.src = Habi.as_pointed("H" + std::to_string(i) + "_ab");
  m.dst = HZFn.as_pointed("H" + std::to_string(i + 1) + "_ZF");
  for (const auto& rep : Habi.reps) m.images.push_back(HZFn.class_of(Habi.a_part(rep)));
  return m;
}

inline CohMap dz_map(const CohGroup& HZFi, const CohGroup& HZGi, const Vec& dz, int i) {
  CohMap m;
  m.label = "dZ" + std::to_string(i);
  m.src = HZFi.as_pointed("H" + std::to_string(i) + "_ZF");
  m.dst = HZGi.as_pointed("H" + std::to_string(i) + "_ZG");
  for (const auto& rep : HZFi.reps) m.images.push_back(HZGi.class_of(detail::push_values(rep, dz)));
  return m;
}

inline LongSequence les_long(const CenterComplex& cc, const Budget& budget = {}) {
  LongSequence L;
  for (int d = 0; d <= 3; ++d) {
    L.HZF.push_back(cohomology(cc.ZF.sub, d, budget));
    L.HZG.push_back(cohomology(cc.ZG.sub, d, budget));
  }
  for (int d = 0; d <= 2; ++d) L.Hab.push_back(hypercohomology(cc, d, budget));
  for (int i = 0; i <= 2; ++i) {
    L.maps.push_back(j_map(L.HZG[i], L.Hab[i], i));
    L.maps.push_back(pi_map(L.Hab[i], L.HZF[i + 1], i));
    L.maps.push_back(dz_map(L.HZF[i + 1], L.HZG[i + 1], cc.dz, i + 1));
  }
  for (size_t k = 0; k + 1 < L.maps.size(); ++k)
    L.joints.push_back({L.maps[k].dst.label, exact_at(L.maps[k], L.maps[k + 1])});
  return L;
}

// ---------------------------------------------------------------------------
// The (kamb) sequence for quasi-abelian modules:
//   ... -> H^{i-1}(coker) -> H^{i+1}(ker) -> H^i_ab -t_ab-> H^i(coker) -> ...
// ---------------------------------------------------------------------------

struct KambSequence {
  GammaSubgroup ker;    // ker boundary inside F
  GammaQuotient coker;  // G / im boundary
  std::vector<CohGroup> Hker;    // degrees 1..3 stored at [i] for H^{i+1}
  std::vector<CohGroup> Hcoker;  // degrees 0..2
  std::vector<HyperGroup> Hab;   // degrees 0..2
  std::vector<CohMap> maps;      // u0, t0, con1, u1, t1, con2, u2, t2
  std::vector<JointVerdict> joints;
  bool u0_injective = false;
  bool kamb2_ok = false;  // c^(i) = t^(i)_ab o j^(i) for i = 0..2

  bool exact() const {
    if (!u0_injective || !kamb2_ok) return false;
    for (auto& j : joints)
      if (!j.exact) return false;
    return true;
  }
};

inline KambSequence les_kamb(const CrossedModule& cm, const CenterComplex& cc,
                             const Budget& budget = {}) {
  if (!is_quasi_abelian(cm).all()) throw NotQuasiAbelian("les_kamb");
  KambSequence K;
  K.ker = gamma_subgroup(cm.F, cm.boundary_kernel());
  K.coker = gamma_quotient(cm.G, cm.boundary_image());
  if (!K.coker.quot.grp.is_abelian())
    throw NotQuasiAbelian("cokernel of a quasi-abelian module must be abelian");
  for (int i = 0; i <= 2; ++i) {
    K.Hker.push_back(cohomology(K.ker.sub, i + 1, budget));
    K.Hcoker.push_back(cohomology(K.coker.quot, i, budget));
    K.Hab.push_back(hypercohomology(cc, i, budget));
  }

  int gn = cm.F.gamma.n;
  // ker(local) -> ZF(local)
  Vec ker_to_zf(K.ker.sub.grp.n);
  for (int i = 0; i < K.ker.sub.grp.n; ++i) {
    int loc = cc.ZF.ambient_to_local[K.ker.elems[i]];
    if (loc < 0) throw NotQuasiAbelian("kernel not contained in Z(F)");
    ker_to_zf[i] = loc;
  }
  // ZG(local) -> coker index
  Vec zg_to_coker(cc.ZG.sub.grp.n);
  for (int i = 0; i < cc.ZG.sub.grp.n; ++i) zg_to_coker[i] = K.coker.proj(cc.ZG.elems[i]);
  // section coker -> ZG(local): some central element in the coset (exists by (ii))
  Vec coker_to_zg(K.coker.quot.grp.n, -1);
  for (int i = 0; i < cc.ZG.sub.grp.n; ++i)
    if (coker_to_zg[zg_to_coker[i]] < 0) coker_to_zg[zg_to_coker[i]] = i;
  for (int v : coker_to_zg)
    if (v < 0) throw NotQuasiAbelian("Z(G) does not surject onto coker");
  // section Z(im bd) (as ZG-local values) -> ZF(local) through dz
  Vec dz_section(cc.ZG.sub.grp.n, -1);
  for (int i = 0; i < cc.ZF.sub.grp.n; ++i)
    if (dz_section[cc.dz[i]] < 0) dz_section[cc.dz[i]] = i;

  auto u_map = [&](int i) {
    CohMap m;
    m.label = "u" + std::to_string(i);
    m.src = K.Hker[i].as_pointed("H" + std::to_string(i + 1) + "_ker");
    m.dst = K.Hab[i].as_pointed("H" + std::to_string(i) + "_ab");
    for (const auto& rep : K.Hker[i].reps)
      m.images.push_back(
          K.Hab[i].class_of(detail::push_values(rep, ker_to_zf), cochain_zero(gn, i)));
    return m;
  };
  auto t_map = [&](int i) {
    CohMap m;
    m.label = "t_ab" + std::to_string(i);
    m.src = K.Hab[i].as_pointed("H" + std::to_string(i) + "_ab");
    m.dst = K.Hcoker[i].as_pointed("H" + std::to_string(i) + "_coker");
    // t_ab([a,b]) = [-push(b)], matching the sign of j so that t_ab o j is the
    // canonical map Z(G) -> coker
    for (const auto& rep : K.Hab[i].reps)
      m.images.push_back(K.Hcoker[i].class_of(detail::push_values(
          cochain_neg(cc.ZG.sub.grp, K.Hab[i].b_part(rep)), zg_to_coker)));
    return m;
  };
  auto con_map = [&](int i) {  // H^{i-1}(coker) -> H^{i+1}(ker)
    CohMap m;
    m.label = "con" + std::to_string(i);
    m.src = K.Hcoker[i - 1].as_pointed("H" + std::to_string(i - 1) + "_coker");
    m.dst = K.Hker[i].as_pointed("H" + std::to_string(i + 1) + "_ker");
    Vec zf_to_ker(cc.ZF.sub.grp.n, -1);
    for (int j = 0; j < K.ker.sub.grp.n; ++j) zf_to_ker[ker_to_zf[j]] = j;
    for (const auto& rep : K.Hcoker[i - 1].reps) {
      Vec lift = detail::push_values(rep, coker_to_zg);          // C^{i-1}(ZG)
      Vec d = diff(cc.ZG.sub, i - 1, lift);                      // values in Z(im bd)
      Vec x(d.size());
      for (size_t p = 0; p < d.size(); ++p) {
        x[p] = dz_section[d[p]];
        if (x[p] < 0) throw NotQuasiAbelian("dz section miss");  // cannot happen: dz' surjective
      }
      Vec a = diff(cc.ZF.sub, i, x);  // lands in ker dz = ker bd
      Vec a_ker(a.size());
      for (size_t p = 0; p < a.size(); ++p) {
        a_ker[p] = zf_to_ker[a[p]];
        if (a_ker[p] < 0) throw std::runtime_error("connecting map left the kernel");
      }
      m.images.push_back(K.Hker[i].class_of(a_ker));
    }
    return m;
  };

  K.maps.push_back(u_map(0));
  K.maps.push_back(t_map(0));
  for (int i = 1; i <= 2; ++i) {
    K.maps.push_back(con_map(i));
    K.maps.push_back(u_map(i));
    K.maps.push_back(t_map(i));
  }
  K.u0_injective = injective(K.maps[0]);
  for (size_t k = 0; k + 1 < K.maps.size(); ++k)
    K.joints.push_back({K.maps[k].dst.label, exact_at(K.maps[k], K.maps[k + 1])});

  // (kamb2): the canonical map c^(i): H^i(Z(G)) -> H^i(coker) factors as
  // t_ab o j.
  K.kamb2_ok = true;
  for (int i = 0; i <= 2; ++i) {
    CohGroup HZG = cohomology(cc.ZG.sub, i, budget);
    CohMap j = j_map(HZG, K.Hab[i], i);
    const CohMap& t = K.maps[3 * i + 1];  // t_ab at degree i
    for (int k = 0; k < HZG.size(); ++k) {
      int via = t(j(k));
      int direct = K.Hcoker[i].class_of(detail::push_values(HZG.reps[k], zg_to_coker));
      if (via != direct) K.kamb2_ok = false;
    }
  }
  return K;
}

}  // namespace qac

#endif
