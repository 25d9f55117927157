#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qac/catalog.hpp"

using namespace qac;

TEST_CASE("the builtin catalog has eleven validated instances") {
  auto B = builtin();
  REQUIRE(B.size() == 11);
  int qa = 0;
  for (const auto& in : B) {
    INFO(in.name);
    CHECK(validate(in.cm).ok());
    // stored flags match recomputation
    CHECK(in.quasi_abelian == is_quasi_abelian(in.cm).all());
    GroupHom bd{in.cm.F.grp, in.cm.G.grp, in.cm.boundary};
    CHECK(in.injective_bd == bd.injective());
    CHECK(in.surjective_bd == bd.surjective());
    qa += in.quasi_abelian;
  }
  CHECK(qa == 10);
}

TEST_CASE("instance names are unique and stable") {
  auto B = builtin();
  std::vector<std::string> names;
  for (const auto& in : B) names.push_back(in.name);
  for (const char* expect : {"trivial", "z4-z2-trivial", "z4-z2-inversion", "0-z2",
                             "z2-0", "id-s3", "id-q8", "s3-s3xc2-trivial",
                             "s3-s3xc2-conj", "q8-mod-center", "0-z3-c3"})
    CHECK(std::find(names.begin(), names.end(), expect) != names.end());
  std::sort(names.begin(), names.end());
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
}

TEST_CASE("the negative instance fails exactly conditions (i) and (iii)") {
  for (const auto& in : builtin())
    if (in.name == "q8-mod-center") {
      QuasiAbelianVerdict v = is_quasi_abelian(in.cm);
      CHECK(!v.zg_acts_trivially);
      CHECK(v.image_center_cover);
      CHECK(!v.dz_surjective);
    }
}

TEST_CASE("discover(2,2,2) finds the three basic shapes") {
  auto D = discover(2, 2, 2);
  bool has_0c2 = false, has_idc2 = false, has_c20 = false;
  for (const auto& in : D) {
    CHECK(validate(in.cm).ok());
    if (in.cm.F.grp.n == 1 && in.cm.G.grp.n == 2) has_0c2 = true;
    if (in.cm.F.grp.n == 2 && in.cm.G.grp.n == 2 && in.injective_bd && in.surjective_bd)
      has_idc2 = true;
    if (in.cm.F.grp.n == 2 && in.cm.G.grp.n == 1) has_c20 = true;
  }
  CHECK(has_0c2);
  CHECK(has_idc2);
  CHECK(has_c20);
}

TEST_CASE("discover(4,4,2) validates, is deterministic, and is nontrivial") {
  auto D = discover(4, 4, 2);
  CHECK(D.size() > 100);
  int qa = 0;
  for (const auto& in : D) {
    INFO(in.name);
    CHECK(validate(in.cm).ok());
    CHECK(in.quasi_abelian == is_quasi_abelian(in.cm).all());
    qa += in.quasi_abelian;
  }
  CHECK(qa > 50);
  // deterministic: identical names and tables on a second run
  auto D2 = discover(4, 4, 2);
  REQUIRE(D.size() == D2.size());
  for (size_t i = 0; i < D.size(); ++i) {
    CHECK(D[i].name == D2[i].name);
    CHECK(D[i].cm.boundary == D2[i].cm.boundary);
    CHECK(D[i].cm.F.grp.tab == D2[i].cm.F.grp.tab);
    CHECK(D[i].cm.gact == D2[i].cm.gact);
  }
}

TEST_CASE("discovered instances have distinct fingerprints") {
  // the dedup is conservative: no two kept instances share a fingerprint
  auto D = discover(3, 3, 2);
  std::vector<std::string> fps;
  for (const auto& in : D) fps.push_back(detail::fingerprint(in, Budget{}));
  std::sort(fps.begin(), fps.end());
  CHECK(std::adjacent_find(fps.begin(), fps.end()) == fps.end());
}

TEST_CASE("discover refuses bounds beyond the supported ceiling") {
  CHECK_THROWS_AS(discover(9, 4, 2), std::runtime_error);
  CHECK_THROWS_AS(discover(4, 9, 2), std::runtime_error);
  CHECK_THROWS_AS(discover(4, 4, 5), std::runtime_error);
}
