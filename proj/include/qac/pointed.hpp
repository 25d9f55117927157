#ifndef QAC_POINTED_HPP
#define QAC_POINTED_HPP

#include <optional>
#include <string>
#include <vector>

#include "qac/base.hpp"

namespace qac {

/// A computed cohomology set: class count, basepoint, optional neutral
/// subset, and the name of what it is.
struct PointedSet {
  std::string label;
  int size = 1;
  int base = 0;
  std::optional<Vec> neutral;  // class indices, when the set carries them
  bool is_group = false;

  bool neutral_contains(int i) const {
    if (!neutral) return false;
    for (int v : *neutral)
      if (v == i) return true;
    return false;
  }
};

/// A map between two cohomology sets, recorded class-by-class.
struct CohMap {
  std::string label;
  PointedSet src, dst;
  Vec images;

  int operator()(int i) const { return images[i]; }

  bool pointed() const { return images[src.base] == dst.base; }

  Vec image_set() const {
    Vec im = images;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }
};

/// Pointed-set exactness at the joint between `in` and `out`:
/// image(in) == out^{-1}(basepoint).
inline bool exact_at(const CohMap& in, const CohMap& out) {
  if (in.dst.size != out.src.size) return false;
  std::vector<char> im(in.dst.size, 0), ker(out.src.size, 0);
  for (int v : in.images) im[v] = 1;
  for (int i = 0; i < out.src.size; ++i) ker[i] = (out.images[i] == out.dst.base);
  return im == ker;
}

/// Exactness of "1 -> A -> B": the first map is injective.
inline bool injective(const CohMap& m) {
  std::vector<char> seen(m.dst.size, 0);
  for (int v : m.images)
    if (seen[v]++) return false;
  return true;
}

struct JointVerdict {
  std::string at;
  bool exact = false;
};

struct SequenceReport {
  std::vector<CohMap> maps;
  std::vector<JointVerdict> joints;
  // the Theorem 4.2 special criterion at H1_ab, when applicable
  std::optional<bool> ab1_image_criterion;
  std::optional<bool> neutral_preserved;  // lien-level boundary maps neutral into neutral

  bool all_pass() const {
    for (const auto& j : joints)
      if (!j.exact) return false;
    if (ab1_image_criterion && !*ab1_image_criterion) return false;
    if (neutral_preserved && !*neutral_preserved) return false;
    return true;
  }
};

}  // namespace qac

#endif
