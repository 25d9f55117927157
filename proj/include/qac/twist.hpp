#ifndef QAC_TWIST_HPP
#define QAC_TWIST_HPP

#include <string>
#include <vector>

#include "qac/abmap.hpp"

namespace qac {

/// Twist of the crossed module by a 1-cocycle c valued in G:
/// new Gamma-action s*g = c[s] * s(g) * c[s]^-1 on G and s*f = ^{c[s]}(s(f))
/// on F; groups, boundary and G-action are untouched.
inline CrossedModule twist_xmod(const CrossedModule& cm, const Vec& c) {
  if (!is_one_cocycle(cm.G, c)) throw std::runtime_error("twist_xmod: not a 1-cocycle");
  CrossedModule tw = cm;
  int gn = cm.F.gamma.n;
  for (int s = 0; s < gn; ++s) {
    Vec pf(cm.F.grp.n), pg(cm.G.grp.n);
    for (int f = 0; f < cm.F.grp.n; ++f) pf[f] = cm.gapply(c[s], cm.F.apply(s, f));
    for (int g = 0; g < cm.G.grp.n; ++g) pg[g] = cm.G.grp.conj(c[s], cm.G.apply(s, g));
    tw.F.act[s] = pf;
    tw.G.act[s] = pg;
  }
  return tw;
}

/// Twisting twice by composable cocycles equals twisting once by the
/// pointwise product d*c (d a cocycle of the c-twist).
inline bool twist_composition_coherent(const CrossedModule& cm, const Vec& c, const Vec& d) {
  CrossedModule once = twist_xmod(cm, c);
  CrossedModule twice = twist_xmod(once, d);
  Vec prod(c.size());
  for (size_t s = 0; s < c.size(); ++s) prod[s] = cm.G.grp.mul(d[s], c[s]);
  CrossedModule direct = twist_xmod(cm, prod);
  return twice.F.act == direct.F.act && twice.G.act == direct.G.act;
}

/// theta_c: H^1 of a Gamma-group -> H^1 of its twist by c, via q -> q * c^-1
/// pointwise. The convention is certified by theta_c([c]) = basepoint.
inline CohMap theta(const H1Set& src, const H1Set& dst, const Vec& c,
                    const std::string& label = "theta") {
  const FiniteGroup& A = src.mod.grp;
  CohMap m;
  m.label = label;
  m.src = src.as_pointed("H1");
  m.dst = dst.as_pointed("H1_twist");
  for (const auto& q : src.reps) {
    Vec im(q.size());
    for (size_t s = 0; s < q.size(); ++s) im[s] = A.mul(q[s], A.inv[c[s]]);
    m.images.push_back(dst.class_of(im));
  }
  return m;
}

inline bool center_complex_tables_equal(const CenterComplex& a, const CenterComplex& b) {
  return a.ZF.elems == b.ZF.elems && a.ZG.elems == b.ZG.elems && a.dz == b.dz &&
         a.ZF.sub.act == b.ZF.sub.act && a.ZG.sub.act == b.ZG.sub.act;
}

/// r_P(x) = x - ab1(p) on H1_ab; check ^P ab1 o theta_P = r_P o ab1 for every
/// class. `corrupt_sign` flips the subtraction (used by the mutation test,
/// which must then fail whenever ab1(p) has order > 2).
inline bool check_prop311(const AbmapSets& A, int p_class, bool corrupt_sign = false,
                          const Budget& budget = {}) {
  const Vec& P = A.X.h1G.reps[p_class];
  CrossedModule tw = twist_xmod(A.cm, P);
  AbmapSets T = abmap_sets(tw, budget);
  if (!center_complex_tables_equal(A.cc, T.cc))
    throw std::runtime_error("twist changed the center complex");
  CohMap th = theta(A.X.h1G, T.X.h1G, P, "theta_P");
  const HyperGroup& Hab1 = A.L.Hab[1];
  int abp = A.ab1(p_class);
  for (int x = 0; x < A.X.h1G.size(); ++x) {
    int rhs = corrupt_sign ? Hab1.add(A.ab1(x), abp) : Hab1.add(A.ab1(x), Hab1.neg(abp));
    if (T.ab1(th(x)) != rhs) return false;
  }
  return true;
}

/// Cor 3.12: ab1(p . q) = j1(p) + ab1(q) for the H^1(Z(G)) action on H^1(G)
/// by pointwise products.
inline bool check_cor312(const AbmapSets& A) {
  const CohGroup& HZ1 = A.L.HZG[1];
  int gn = A.cm.F.gamma.n;
  for (int p = 0; p < HZ1.size(); ++p) {
    for (int q = 0; q < A.X.h1G.size(); ++q) {
      Vec prod(gn);
      for (int s = 0; s < gn; ++s)
        prod[s] = A.cm.G.grp.mul(A.cc.ZG.elems[HZ1.reps[p][s]], A.X.h1G.reps[q][s]);
      int lhs = A.ab1(A.X.h1G.class_of(prod));
      int rhs = A.L.Hab[1].add(A.j1()(p), A.ab1(q));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

namespace detail {

/// Orbits of an H^1(F)-like set under the right H^0_ab action (through phi0).
inline std::vector<int> h0ab_orbits(const AbmapSets& A) {
  int n = A.X.h1F.size();
  std::vector<int> orbit(n, -1);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (orbit[p] >= 0) continue;
    orbit[p] = next;
    // single-step closure suffices: the acting set is a group
    std::vector<int> stack{p};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int c = 0; c < A.L.Hab[0].size(); ++c) {
        int im = act_h0_on_h1F(A.cm, A.X.h1F, A.X.h0cm, cur, A.phi0(c));
        if (orbit[im] < 0) {
          orbit[im] = next;
          stack.push_back(im);
        }
      }
    }
    ++next;
  }
  return orbit;
}

}  // namespace detail

struct Lemma313Verdict {
  bool middle_square = false;  // theta_Q o partial1 = ^P partial1 o theta_P
  bool right_square = false;   // ^Q ab1 o theta_Q = ab1
  bool bottom_exact = false;
  bool formula = false;        // theta_P(p . c) = ^P delta0(c)
  bool all() const { return middle_square && right_square && bottom_exact && formula; }
};

struct FiberReport {
  bool theta_bijections = true;      // every theta used was a bijection
  bool theta_sends_c_to_base = true; // theta_c([c]) = basepoint
  bool prop314a = true;
  bool prop314b = true;
  bool cor315 = true;
  bool card_identity = true;  // sum of fiber sizes = |H1(G)|
  bool lemma313 = true;
  bool all() const {
    return theta_bijections && theta_sends_c_to_base && prop314a && prop314b && cor315 &&
           card_identity && lemma313;
  }
};

inline FiberReport fibers_of_ab1(const AbmapSets& A, const Budget& budget = {}) {
  FiberReport R;
  const CrossedModule& cm = A.cm;
  int gn = cm.F.gamma.n;

  // ---- twists by F-cocycles: Prop 3.14(a) and Lemma 3.13 ----
  for (int pF = 0; pF < A.X.h1F.size(); ++pF) {
    const Vec& P = A.X.h1F.reps[pF];
    Vec Q(gn);
    for (int s = 0; s < gn; ++s) Q[s] = cm.bd(P[s]);
    CrossedModule tw = twist_xmod(cm, Q);
    AbmapSets T = abmap_sets(tw, budget);
    if (!center_complex_tables_equal(A.cc, T.cc))
      throw std::runtime_error("twist changed the center complex");
    CohMap thP = theta(A.X.h1F, T.X.h1F, P, "theta_P");
    CohMap thQ = theta(A.X.h1G, T.X.h1G, Q, "theta_Q");
    if (!injective(thP) || thP.src.size != thP.dst.size) R.theta_bijections = false;
    if (!injective(thQ) || thQ.src.size != thQ.dst.size) R.theta_bijections = false;
    if (thP(pF) != 0 || thQ(A.X.h1G.class_of(Q)) != 0) R.theta_sends_c_to_base = false;

    // (a): stabilizer of pF in H0_ab = image of the twisted ab0
    std::vector<char> stab(A.L.Hab[0].size(), 0), im(A.L.Hab[0].size(), 0);
    for (int c = 0; c < A.L.Hab[0].size(); ++c)
      stab[c] = act_h0_on_h1F(cm, A.X.h1F, A.X.h0cm, pF, A.phi0(c)) == pF;
    for (int v : T.ab0.images) im[v] = 1;
    if (!std::equal(stab.begin(), stab.end(), im.begin())) R.prop314a = false;

    // Lemma 3.13 for this P
    Lemma313Verdict v;
    auto bd1_tw = [&](int q) {
      Vec imv(gn);
      for (int s = 0; s < gn; ++s) imv[s] = tw.bd(T.X.h1F.reps[q][s]);
      return T.X.h1G.class_of(imv);
    };
    auto bd1 = [&](int q) {
      Vec imv(gn);
      for (int s = 0; s < gn; ++s) imv[s] = cm.bd(A.X.h1F.reps[q][s]);
      return A.X.h1G.class_of(imv);
    };
    v.middle_square = true;
    for (int q = 0; q < A.X.h1F.size(); ++q)
      if (thQ(bd1(q)) != bd1_tw(thP(q))) v.middle_square = false;
    v.right_square = true;
    for (int x = 0; x < A.X.h1G.size(); ++x)
      if (T.ab1(thQ(x)) != A.ab1(x)) v.right_square = false;
    {
      CohMap tbd1;
      tbd1.label = "partial1_tw";
      tbd1.src = T.X.h1F.as_pointed("H1_PF");
      tbd1.dst = T.X.h1G.as_pointed("H1_QG");
      for (int q = 0; q < T.X.h1F.size(); ++q) tbd1.images.push_back(bd1_tw(q));
      v.bottom_exact = exact_at(T.ab0, T.delta0) && exact_at(T.delta0, tbd1) &&
                       exact_at(tbd1, T.ab1);
    }
    v.formula = true;
    for (int c = 0; c < A.L.Hab[0].size(); ++c)
      if (thP(act_h0_on_h1F(cm, A.X.h1F, A.X.h0cm, pF, A.phi0(c))) != T.delta0(c))
        v.formula = false;
    if (!v.all()) R.lemma313 = false;
  }

  // ---- (b): partial1 induces H1(F)/H0_ab -> H1(G), injective, image ker ab1
  {
    std::vector<int> orbit = detail::h0ab_orbits(A);
    int norb = 1 + *std::max_element(orbit.begin(), orbit.end());
    Vec orbit_image(norb, -1);
    R.prop314b = true;
    std::vector<char> im(A.X.h1G.size(), 0);
    for (int p = 0; p < A.X.h1F.size(); ++p) {
      Vec imv(gn);
      for (int s = 0; s < gn; ++s) imv[s] = cm.bd(A.X.h1F.reps[p][s]);
      int q = A.X.h1G.class_of(imv);
      im[q] = 1;
      if (orbit_image[orbit[p]] < 0)
        orbit_image[orbit[p]] = q;
      else if (orbit_image[orbit[p]] != q)
        R.prop314b = false;  // not constant on orbits
    }
    std::vector<char> seen(A.X.h1G.size(), 0);
    for (int v : orbit_image)
      if (seen[v]++) R.prop314b = false;  // not injective on orbits
    for (int q = 0; q < A.X.h1G.size(); ++q)
      if (im[q] != (A.ab1(q) == 0 ? 1 : 0)) R.prop314b = false;
  }

  // ---- Cor 3.15 and the fiber cardinality identity ----
  {
    long long total = 0;
    std::vector<char> image_class_done(A.L.Hab[1].size(), 0);
    for (int pG = 0; pG < A.X.h1G.size(); ++pG) {
      const Vec& P = A.X.h1G.reps[pG];
      CrossedModule tw = twist_xmod(cm, P);
      AbmapSets T = abmap_sets(tw, budget);
      CohMap thP = theta(A.X.h1G, T.X.h1G, P, "theta_P");
      if (!injective(thP) || thP.src.size != thP.dst.size) R.theta_bijections = false;
      Vec th_inv(thP.dst.size);
      for (int i = 0; i < (int)thP.images.size(); ++i) th_inv[thP(i)] = i;
      std::vector<int> orbit = detail::h0ab_orbits(T);
      int norb = 1 + *std::max_element(orbit.begin(), orbit.end());
      // theta_P^-1 o ^P partial1 on orbits
      Vec orbit_image(norb, -1);
      bool ok = true;
      for (int r = 0; r < T.X.h1F.size(); ++r) {
        Vec imv(gn);
        for (int s = 0; s < gn; ++s) imv[s] = tw.bd(T.X.h1F.reps[r][s]);
        int q = th_inv[T.X.h1G.class_of(imv)];
        if (orbit_image[orbit[r]] < 0)
          orbit_image[orbit[r]] = q;
        else if (orbit_image[orbit[r]] != q)
          ok = false;
      }
      std::vector<char> seen(A.X.h1G.size(), 0), fiber(A.X.h1G.size(), 0);
      for (int v : orbit_image)
        if (seen[v]++) ok = false;
      for (int q = 0; q < A.X.h1G.size(); ++q) fiber[q] = A.ab1(q) == A.ab1(pG);
      if (!std::equal(seen.begin(), seen.end(), fiber.begin())) ok = false;
      if (!ok) R.cor315 = false;
      if (!image_class_done[A.ab1(pG)]) {
        image_class_done[A.ab1(pG)] = 1;
        total += norb;
      }
    }
    R.card_identity = total == A.X.h1G.size();
  }
  return R;
}

}  // namespace qac

#endif
