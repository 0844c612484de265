// Named pass/fail checks collected by the validation routines.

#ifndef SUPERCHAR_CHECK_REPORT_HPP_
#define SUPERCHAR_CHECK_REPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace superchar {

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // failing instances when !passed
};

struct CheckReport {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  // "name: detail" of the first failing check, empty when ok().
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.name + ": " + c.detail;
    return {};
  }

  Check& add(std::string name) {
    checks.push_back(Check{std::move(name), true, {}});
    return checks.back();
  }
};

// Records a failure on `check`, keeping at most a handful of instances.
inline void record_failure(Check& check, const std::string& instance) {
  constexpr std::size_t kMaxListed = 4;
  if (check.passed) {
    check.passed = false;
    check.detail = instance;
    return;
  }
  auto listed = static_cast<std::size_t>(std::count(check.detail.begin(), check.detail.end(), ';')) + 1;
  if (listed < kMaxListed)
    check.detail += "; " + instance;
  else if (listed == kMaxListed)
    check.detail += "; ...";
}

}  // namespace superchar

#endif  // SUPERCHAR_CHECK_REPORT_HPP_
