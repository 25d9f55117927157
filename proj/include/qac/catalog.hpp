#ifndef QAC_CATALOG_HPP
#define QAC_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "qac/nacoh.hpp"

namespace qac {

struct Instance {
  std::string name;
  CrossedModule cm;
  std::string note;
  bool quasi_abelian = false;
  bool injective_bd = false;
  bool surjective_bd = false;
};

namespace detail {

inline Instance make_instance(std::string name, CrossedModule cm, std::string note) {
  Instance in;
  in.name = std::move(name);
  in.cm = std::move(cm);
  in.note = std::move(note);
  GroupHom bd{in.cm.F.grp, in.cm.G.grp, in.cm.boundary};
  in.quasi_abelian = validate(in.cm).ok() && is_quasi_abelian(in.cm).all();
  in.injective_bd = bd.injective();
  in.surjective_bd = bd.surjective();
  return in;
}

/// G acting on itself by conjugation, boundary the identity.
inline CrossedModule identity_module(const FiniteGroup& g, const FiniteGroup& gamma) {
  CrossedModule cm;
  cm.F = trivial_action(gamma, g);
  cm.G = trivial_action(gamma, g);
  cm.boundary = perm_identity(g.n);
  cm.gact.resize(g.n);
  for (int x = 0; x < g.n; ++x) {
    Vec p(g.n);
    for (int f = 0; f < g.n; ++f) p[f] = g.conj(x, f);
    cm.gact[x] = p;
  }
  return cm;
}

/// F included in G, G acting on F by conjugation pulled back through the
/// (injective) boundary; requires bd(F) normal in G with centralizing quotient
/// handled by the caller's choice of G.
inline CrossedModule inclusion_module(const FiniteGroup& f, const FiniteGroup& g,
                                      const Vec& boundary, const FiniteGroup& gamma) {
  CrossedModule cm;
  cm.F = trivial_action(gamma, f);
  cm.G = trivial_action(gamma, g);
  cm.boundary = boundary;
  Vec pre(g.n, -1);
  for (int x = 0; x < f.n; ++x) pre[boundary[x]] = x;
  cm.gact.resize(g.n);
  for (int gg = 0; gg < g.n; ++gg) {
    Vec p(f.n);
    for (int x = 0; x < f.n; ++x) {
      int c = pre[g.conj(gg, boundary[x])];
      if (c < 0) throw NotNormal("inclusion_module: image not normal");
      p[x] = c;
    }
    cm.gact[gg] = p;
  }
  return cm;
}

inline Vec s3_in_s3xc2_boundary(const FiniteGroup& s3, const FiniteGroup& g) {
  Vec bd(s3.n);
  for (int x = 0; x < s3.n; ++x) bd[x] = x * 2;
  if (!GroupHom{s3, g, bd}.valid())
    for (int x = 0; x < s3.n; ++x) bd[x] = x;
  return bd;
}

}  // namespace detail

inline std::vector<Instance> builtin() {
  using detail::make_instance;
  std::vector<Instance> out;
  auto c2 = cyclic_group(2);
  auto c3 = cyclic_group(3);
  auto c4 = cyclic_group(4);
  auto s3 = symmetric_group(3);
  auto q8 = quaternion_group();

  {  // all-trivial instance
    CrossedModule cm;
    cm.F = trivial_action(c2, trivial_group());
    cm.G = trivial_action(c2, trivial_group());
    cm.boundary = {0};
    cm.gact = {perm_identity(1)};
    out.push_back(make_instance("trivial", cm, "0 -> 0, Gamma = C2 trivial"));
  }
  {  // abelian surjection Z/4 -> Z/2, trivial Gamma-action
    CrossedModule cm;
    cm.F = trivial_action(c2, c4);
    cm.G = trivial_action(c2, c2);
    cm.boundary = {0, 1, 0, 1};
    cm.gact.assign(2, perm_identity(4));
    out.push_back(make_instance("z4-z2-trivial", cm, "Z/4 ->> Z/2, Gamma = C2 trivial"));
  }
  {  // same underlying module, Gamma inverting Z/4
    CrossedModule cm;
    cm.F = GammaGroup{c2, c4, {perm_identity(4), {0, 3, 2, 1}}};
    cm.G = trivial_action(c2, c2);
    cm.boundary = {0, 1, 0, 1};
    cm.gact.assign(2, perm_identity(4));
    out.push_back(make_instance("z4-z2-inversion", cm, "Z/4 ->> Z/2, Gamma = C2 inverts Z/4"));
  }
  {  // 0 -> Z/2
    CrossedModule cm;
    cm.F = trivial_action(c2, trivial_group());
    cm.G = trivial_action(c2, c2);
    cm.boundary = {0};
    cm.gact.assign(2, perm_identity(1));
    out.push_back(make_instance("0-z2", cm, "0 -> Z/2, Gamma = C2 trivial"));
  }
  {  // Z/2 -> 0
    CrossedModule cm;
    cm.F = trivial_action(c2, c2);
    cm.G = trivial_action(c2, trivial_group());
    cm.boundary = {0, 0};
    cm.gact.assign(1, perm_identity(2));
    out.push_back(make_instance("z2-0", cm, "Z/2 -> 0, Gamma = C2 trivial"));
  }
  out.push_back(make_instance("id-s3", detail::identity_module(s3, c2),
                              "identity module on S3, Gamma = C2 trivial"));
  out.push_back(make_instance("id-q8", detail::identity_module(q8, c2),
                              "identity module on Q8, Gamma = C2 trivial"));
  {
    auto g = direct_product(s3, c2);
    Vec bd = detail::s3_in_s3xc2_boundary(s3, g);
    out.push_back(make_instance("s3-s3xc2-trivial", detail::inclusion_module(s3, g, bd, c2),
                                "S3 included in S3 x C2, Gamma = C2 trivial"));
    // Gamma = C2 acting through an order-2 automorphism: conjugation by a
    // transposition on the S3 factor (and trivially on the C2 factor)
    CrossedModule cm = detail::inclusion_module(s3, g, bd, c2);
    int t = -1;
    for (int x = 1; x < s3.n; ++x)
      if (s3.order_of(x) == 2) {
        t = x;
        break;
      }
    Vec pf(s3.n), pg(g.n);
    for (int x = 0; x < s3.n; ++x) pf[x] = s3.conj(t, x);
    for (int x = 0; x < g.n; ++x) pg[x] = g.conj(bd[t], x);
    cm.F.act = {perm_identity(s3.n), pf};
    cm.G.act = {perm_identity(g.n), pg};
    out.push_back(make_instance("s3-s3xc2-conj", cm,
                                "S3 included in S3 x C2, Gamma = C2 by conjugation "
                                "with a transposition"));
  }
  {  // negative instance: Q8 -> Q8/Z with conjugation action; fails (i), (iii)
    auto zc = center(q8);
    auto qv = quotient(q8, zc);
    CrossedModule cm;
    cm.F = trivial_action(c2, q8);
    cm.G = trivial_action(c2, qv.grp);
    cm.boundary = qv.proj.map;
    cm.gact.resize(qv.grp.n);
    for (int cls = 0; cls < qv.grp.n; ++cls) {
      int rep = qv.cosets[cls][0];
      Vec p(q8.n);
      for (int f = 0; f < q8.n; ++f) p[f] = q8.conj(rep, f);
      cm.gact[cls] = p;
    }
    out.push_back(make_instance("q8-mod-center", cm,
                                "Q8 ->> Q8/Z by conjugation; not quasi-abelian"));
  }
  {  // 0 -> Z/3 with Gamma = C3: classes of order 3 in H1_ab
    CrossedModule cm;
    cm.F = trivial_action(c3, trivial_group());
    cm.G = trivial_action(c3, c3);
    cm.boundary = {0};
    cm.gact.assign(3, perm_identity(1));
    out.push_back(make_instance("0-z3-c3", cm, "0 -> Z/3, Gamma = C3 trivial"));
  }
  return out;
}

namespace detail {

inline std::string order_profile(const FiniteGroup& g) {
  Vec o(g.n);
  for (int x = 0; x < g.n; ++x) o[x] = g.order_of(x);
  std::sort(o.begin(), o.end());
  std::string s;
  for (int v : o) s += std::to_string(v) + ".";
  return s;
}

/// Conservative isomorphism fingerprint: order data, flags, fixed-point data
/// and small cohomology cardinalities. Never merges structurally different
/// instances; may keep isomorphic duplicates.
inline std::string fingerprint(const Instance& in, const Budget& budget) {
  const CrossedModule& cm = in.cm;
  std::string s;
  s += std::to_string(cm.F.gamma.n) + "|" + order_profile(cm.F.gamma);
  s += "|F:" + order_profile(cm.F.grp) + "|G:" + order_profile(cm.G.grp);
  s += "|im:" + std::to_string(cm.boundary_image().size());
  s += "|ker:" + std::to_string(cm.boundary_kernel().size());
  s += "|qa:" + std::to_string(in.quasi_abelian);
  Vec fixF, fixG;
  for (int g = 0; g < cm.F.gamma.n; ++g) {
    int cf = 0, cg = 0;
    for (int x = 0; x < cm.F.grp.n; ++x) cf += cm.F.apply(g, x) == x;
    for (int x = 0; x < cm.G.grp.n; ++x) cg += cm.G.apply(g, x) == x;
    fixF.push_back(cf);
    fixG.push_back(cg);
  }
  std::sort(fixF.begin(), fixF.end());
  std::sort(fixG.begin(), fixG.end());
  s += "|fix:";
  for (int v : fixF) s += std::to_string(v) + ".";
  s += "/";
  for (int v : fixG) s += std::to_string(v) + ".";
  int nontrivial_gact = 0;
  for (const auto& p : cm.gact) nontrivial_gact += p != perm_identity(cm.F.grp.n);
  s += "|gact:" + std::to_string(nontrivial_gact);
  XmodSets X = xmod_sets(cm, budget);
  s += "|h:" + std::to_string(X.hm1.size()) + "." + std::to_string(X.h0cm.size()) + "." +
       std::to_string(X.h1cm.size()) + "." + std::to_string(X.h1F.size()) + "." +
       std::to_string(X.h1G.size());
  return s;
}

}  // namespace detail

/// Brute-force enumeration of valid crossed modules within the given order
/// bounds, deduplicated by conservative fingerprint. Deterministic for fixed
/// bounds.
inline std::vector<Instance> discover(int max_f, int max_g, int max_gamma,
                                      const Budget& budget = {}) {
  if (max_f > 8 || max_g > 8 || max_gamma > 4 || max_f < 1 || max_g < 1 || max_gamma < 1)
    throw std::runtime_error("discover: bounds outside configured ceiling (8, 8, 4)");
  std::vector<Instance> out;
  std::map<std::string, int> seen;
  for (int ng = 1; ng <= max_gamma; ++ng)
    for (const auto& gamma : small_groups(ng))
      for (int nf = 1; nf <= max_f; ++nf)
        for (const auto& f : small_groups(nf)) {
          AutGroup autf = automorphisms(f);
          auto gamma_on_f = all_homs(gamma, autf.grp, budget);
          for (int ngr = 1; ngr <= max_g; ++ngr)
            for (const auto& g : small_groups(ngr)) {
              AutGroup autg = automorphisms(g);
              auto gamma_on_g = all_homs(gamma, autg.grp, budget);
              auto boundaries = all_homs(f, g, budget);
              auto g_on_f = all_homs(g, autf.grp, budget);
              budget.require((long long)gamma_on_f.size() * (long long)gamma_on_g.size() *
                             (long long)boundaries.size() * (long long)g_on_f.size());
              for (const auto& af : gamma_on_f)
                for (const auto& ag : gamma_on_g)
                  for (const auto& bd : boundaries)
                    for (const auto& gf : g_on_f) {
                      CrossedModule cm;
                      std::vector<Vec> actf(gamma.n), actg(gamma.n);
                      for (int s = 0; s < gamma.n; ++s) {
                        actf[s] = autf.perms[af.map[s]];
                        actg[s] = autg.perms[ag.map[s]];
                      }
                      cm.F = GammaGroup{gamma, f, actf};
                      cm.G = GammaGroup{gamma, g, actg};
                      cm.boundary = bd.map;
                      cm.gact.resize(g.n);
                      for (int x = 0; x < g.n; ++x) cm.gact[x] = autf.perms[gf.map[x]];
                      if (!validate(cm).ok()) continue;
                      Instance in = detail::make_instance("", cm, "discovered");
                      std::string fp = detail::fingerprint(in, budget);
                      if (seen.count(fp)) continue;
                      seen[fp] = 1;
                      in.name = "disc-" + std::to_string(out.size()) + "-F" +
                                std::to_string(nf) + "G" + std::to_string(ngr) + "Gam" +
                                std::to_string(ng);
                      out.push_back(std::move(in));
                    }
            }
        }
  return out;
}

}  // namespace qac

#endif
