#ifndef QAC_BASE_HPP
#define QAC_BASE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qac {

using Vec = std::vector<int>;

// Raised when a Cayley table fails one of the group axioms.
struct NotAGroup : std::runtime_error {
  explicit NotAGroup(const std::string& why) : std::runtime_error("not a group: " + why) {}
};

struct NotASubgroup : std::runtime_error {
  explicit NotASubgroup(const std::string& why) : std::runtime_error("not a subgroup: " + why) {}
};

struct NotNormal : std::runtime_error {
  explicit NotNormal(const std::string& why) : std::runtime_error("not normal: " + why) {}
};

struct OrderBoundExceeded : std::runtime_error {
  explicit OrderBoundExceeded(const std::string& why) : std::runtime_error(why) {}
};

struct NotQuasiAbelian : std::runtime_error {
  explicit NotQuasiAbelian(const std::string& why) : std::runtime_error("not quasi-abelian: " + why) {}
};

struct NotCentrable : std::runtime_error {
  explicit NotCentrable(const std::string& why) : std::runtime_error(why) {}
};

struct NoUniqueTranslate : std::runtime_error {
  explicit NoUniqueTranslate(const std::string& why) : std::runtime_error(why) {}
};

// Enumerations refuse to start when the candidate count exceeds the budget.
struct BudgetExceeded : std::runtime_error {
  long long estimate;
  explicit BudgetExceeded(long long est)
      : std::runtime_error("enumeration budget exceeded: " +
                           (est < 0 ? std::string("candidate count overflows int64")
                                    : "~" + std::to_string(est) + " candidates")),
        estimate(est) {}
};

struct Budget {
  long long limit = 100'000'000;  // candidate evaluations

  void require(long long estimate) const {
    if (estimate < 0 || estimate > limit) throw BudgetExceeded(estimate < 0 ? -1 : estimate);
  }
};

// pow with overflow saturation to -1 (treated as "over any budget")
inline long long ipow_sat(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    if (b != 0 && r > 4'000'000'000'000'000'000LL / b) return -1;
    r *= b;
  }
  return r;
}

}  // namespace qac

#endif
