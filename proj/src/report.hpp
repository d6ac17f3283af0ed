#pragma once

#include <string>
#include <vector>

namespace iwb {

// One verified statement inside a check.
struct CheckItem {
  std::string name;
  bool passed = true;
  std::string detail;
};

using CheckItems = std::vector<CheckItem>;

inline bool all_passed(const CheckItems& items) {
  for (const auto& i : items)
    if (!i.passed) return false;
  return true;
}

inline const CheckItem* first_failure(const CheckItems& items) {
  for (const auto& i : items)
    if (!i.passed) return &i;
  return nullptr;
}

}  // namespace iwb
