// cmx: command-line driver for crossed-module cohomology computations.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qac/catalog.hpp"
#include "qac/cmx.hpp"
#include "qac/twist.hpp"

using namespace qac;

namespace {

struct Options {
  std::string format = "text";
  long long budget_flag = -1;

  Budget budget() const {
    if (budget_flag >= 0) return Budget{budget_flag};
    if (const char* env = std::getenv("CMX_BUDGET")) {
      try {
        return Budget{std::stoll(env)};
      } catch (const std::exception&) {
        throw std::runtime_error("CMX_BUDGET is not a number: " + std::string(env));
      }
    }
    return Budget{};
  }
  bool tsv() const { return format == "tsv"; }
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}));
  cmd->add_option("--budget", opt.budget_flag, "enumeration budget (overrides CMX_BUDGET)");
}

CrossedModule load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return to_crossed_module(parse(ss.str()));
}

void emit_card(const Options& opt, const std::string& label, long long n) {
  if (opt.tsv())
    std::cout << "CARD\t" << label << "\t" << n << "\n";
  else
    std::cout << "|" << label << "| = " << n << "\n";
}

void emit_check(const Options& opt, const std::string& name, bool pass) {
  if (opt.tsv())
    std::cout << "CHECK\t" << name << "\t" << (pass ? "true" : "false") << "\n";
  else
    std::cout << name << ": " << (pass ? "pass" : "FAIL") << "\n";
}

int run_validate(const Options& opt, const std::string& file) {
  CrossedModule cm = load(file);
  ValidationReport r = validate(cm);
  if (opt.tsv()) {
    std::cout << "VALID\t" << (r.ok() ? "true" : "false") << "\n";
    for (const auto& w : r.violations) std::cout << "WITNESS\t" << w << "\n";
  } else {
    std::cout << (r.ok() ? "valid crossed module" : "invalid crossed module") << "\n";
    for (const auto& w : r.violations) std::cout << "  witness: " << w << "\n";
  }
  if (!r.ok()) return 2;
  QuasiAbelianVerdict q = is_quasi_abelian(cm);
  emit_check(opt, "quasi_abelian", q.all());
  emit_check(opt, "zg_acts_trivially", q.zg_acts_trivially);
  emit_check(opt, "image_center_cover", q.image_center_cover);
  emit_check(opt, "dz_surjective", q.dz_surjective);
  return 0;
}

int run_cohomology(const Options& opt, const std::string& file, const std::string& object,
                   int degree) {
  CrossedModule cm = load(file);
  ValidationReport r = validate(cm);
  if (!r.ok()) {
    std::cerr << "error: invalid crossed module: " << r.violations.front() << "\n";
    return 2;
  }
  Budget budget = opt.budget();
  std::string deg = degree < 0 ? "m" + std::to_string(-degree) : std::to_string(degree);
  auto bad_degree = [&]() -> int {
    std::cerr << "error: unsupported degree " << degree << " for object " << object << "\n";
    return 2;
  };
  if (object == "F" || object == "G") {
    const GammaGroup& A = object == "F" ? cm.F : cm.G;
    if (degree == 0)
      emit_card(opt, "H0_" + object, h0_fixed(A).size());
    else if (degree == 1)
      emit_card(opt, "H1_" + object, h1(A, budget).size());
    else if (degree == 2)
      emit_card(opt, "H2_lien" + object, h2_lien(A, budget).size());
    else
      return bad_degree();
  } else if (object == "ab") {
    if (degree < -1 || degree > 2) return bad_degree();
    CenterComplex cc = center_complex(cm);
    emit_card(opt, "H" + deg + "_ab", hypercohomology(cc, degree, budget).size());
  } else if (object == "cm") {
    if (degree < -1 || degree > 1) return bad_degree();
    XmodSets X = xmod_sets(cm, budget);
    if (degree == -1)
      emit_card(opt, "Hm1_cm", X.hm1.size());
    else if (degree == 0)
      emit_card(opt, "H0_cm", X.h0cm.size());
    else
      emit_card(opt, "H1_cm", X.h1cm.size());
  } else if (object == "lienF" || object == "lienG") {
    if (degree != 2) return bad_degree();
    const GammaGroup& A = object == "lienF" ? cm.F : cm.G;
    LienSet L = h2_lien(A, budget);
    emit_card(opt, "H2_" + object, L.size());
    emit_card(opt, "H2_" + object + "_neutral", (long long)L.neutral_classes.size());
  } else {
    std::cerr << "error: unknown object " << object << "\n";
    return 2;
  }
  return 0;
}

int run_theorem42(const Options& opt, const std::string& file) {
  CrossedModule cm = load(file);
  ValidationReport r = validate(cm);
  if (!r.ok()) {
    std::cerr << "error: invalid crossed module: " << r.violations.front() << "\n";
    return 2;
  }
  Budget budget = opt.budget();
  AbmapSets A = abmap_sets(cm, budget);
  Theorem42Report R = theorem42(A);

  emit_card(opt, "Hm1_cm", A.X.hm1.size());
  emit_card(opt, "H0_F", A.X.h0F.size());
  emit_card(opt, "H0_G", A.X.h0G.size());
  emit_card(opt, "H0_ab", A.L.Hab[0].size());
  emit_card(opt, "H1_F", A.X.h1F.size());
  emit_card(opt, "H1_G", A.X.h1G.size());
  emit_card(opt, "H1_ab", A.L.Hab[1].size());
  emit_card(opt, "H2_lienF", A.lienF.size());
  emit_card(opt, "H2_lienG", A.lienG.size());
  emit_card(opt, "H2_ab", A.L.Hab[2].size());
  emit_card(opt, "H3_ZF", A.L.HZF[3].size());
  emit_card(opt, "H3_ZG", A.L.HZG[3].size());

  for (const auto& j : R.seq.joints) {
    if (opt.tsv())
      std::cout << "EXACT_AT\t" << j.at << "\t" << (j.exact ? "true" : "false") << "\n";
    else
      std::cout << "exact at " << j.at << ": " << (j.exact ? "yes" : "NO") << "\n";
  }
  if (opt.tsv())
    std::cout << "AB1_IMAGE_CRITERION\t"
              << (*R.seq.ab1_image_criterion ? "true" : "false") << "\n";
  else
    std::cout << "im(ab1) = {y : delta1(y) neutral}: "
              << (*R.seq.ab1_image_criterion ? "yes" : "NO") << "\n";
  emit_check(opt, "first_map_injective", R.first_injective);
  emit_check(opt, "neutral_preserved", *R.seq.neutral_preserved);
  emit_check(opt, "group_homs", R.group_homs);
  emit_check(opt, "theorem42", R.all_pass());
  return R.all_pass() ? 0 : 1;
}

int run_twistcheck(const Options& opt, const std::string& file, bool corrupt_rp) {
  CrossedModule cm = load(file);
  ValidationReport r = validate(cm);
  if (!r.ok()) {
    std::cerr << "error: invalid crossed module: " << r.violations.front() << "\n";
    return 2;
  }
  Budget budget = opt.budget();
  AbmapSets A = abmap_sets(cm, budget);
  bool p311 = true;
  for (int p = 0; p < A.X.h1G.size(); ++p)
    if (!check_prop311(A, p, corrupt_rp, budget)) p311 = false;
  bool p312 = check_cor312(A);
  FiberReport F = fibers_of_ab1(A, budget);
  bool comp = true;
  for (int p = 0; p < A.X.h1G.size(); ++p) {
    CrossedModule tw = twist_xmod(cm, A.X.h1G.reps[p]);
    AbmapSets T = abmap_sets(tw, budget);
    for (int q = 0; q < T.X.h1G.size(); ++q)
      if (!twist_composition_coherent(cm, A.X.h1G.reps[p], T.X.h1G.reps[q])) comp = false;
  }
  emit_check(opt, "prop311_rP", p311);
  emit_check(opt, "cor312_j1", p312);
  emit_check(opt, "lemma313_diagram", F.lemma313);
  emit_check(opt, "prop314a_stabilizer", F.prop314a);
  emit_check(opt, "prop314b_injection", F.prop314b);
  emit_check(opt, "cor315_fibers", F.cor315);
  emit_check(opt, "fiber_cardinality", F.card_identity);
  emit_check(opt, "theta_bijective", F.theta_bijections);
  emit_check(opt, "theta_basepoint", F.theta_sends_c_to_base);
  emit_check(opt, "twist_composition", comp);
  bool all = p311 && p312 && comp && F.all();
  emit_check(opt, "twistcheck", all);
  return all ? 0 : 1;
}

void emit_instance(const Options& opt, const Instance& in) {
  if (opt.tsv())
    std::cout << "INSTANCE\t" << in.name << "\t" << in.cm.F.grp.n << "\t" << in.cm.G.grp.n
              << "\t" << in.cm.F.gamma.n << "\t" << (in.quasi_abelian ? "true" : "false")
              << "\t" << in.note << "\n";
  else
    std::cout << in.name << ": |F|=" << in.cm.F.grp.n << " |G|=" << in.cm.G.grp.n
              << " |Gamma|=" << in.cm.F.gamma.n
              << (in.quasi_abelian ? " quasi-abelian" : " not quasi-abelian") << " — "
              << in.note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cmx: quasi-abelian crossed modules and their cohomology"};
  app.require_subcommand(1);

  Options opt;
  std::string file, object = "ab", catalog_sub;
  int degree = 0, max_f = 4, max_g = 4, max_gamma = 2;

  auto* v = app.add_subcommand("validate", "check the crossed-module axioms");
  v->add_option("file", file)->required();
  add_common(v, opt);

  auto* c = app.add_subcommand("cohomology", "cardinality of a cohomology set");
  c->add_option("file", file)->required();
  c->add_option("--object", object, "F|G|ab|cm|lienF|lienG")->required();
  c->add_option("--degree", degree)->required();
  add_common(c, opt);

  auto* t = app.add_subcommand("theorem42", "13-term exactness report");
  t->add_option("file", file)->required();
  add_common(t, opt);

  auto* w = app.add_subcommand("twistcheck", "twisting and fiber verdicts");
  w->add_option("file", file)->required();
  bool corrupt_rp = false;
  w->add_flag("--corrupt-rp", corrupt_rp,
              "self-test: flip the sign inside the r_P comparison");
  add_common(w, opt);

  auto* cat = app.add_subcommand("catalog", "built-in instances");
  cat->add_option("action", catalog_sub)->check(CLI::IsMember({"list"}))->required();
  add_common(cat, opt);

  auto* d = app.add_subcommand("discover", "brute-force instance search");
  d->add_option("--max-f", max_f);
  d->add_option("--max-g", max_g);
  d->add_option("--max-gamma", max_gamma);
  add_common(d, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) return run_validate(opt, file);
    if (c->parsed()) return run_cohomology(opt, file, object, degree);
    if (t->parsed()) return run_theorem42(opt, file);
    if (w->parsed()) return run_twistcheck(opt, file, corrupt_rp);
    if (cat->parsed()) {
      for (const auto& in : builtin()) emit_instance(opt, in);
      return 0;
    }
    if (d->parsed()) {
      for (const auto& in : discover(max_f, max_g, max_gamma, opt.budget()))
        emit_instance(opt, in);
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
