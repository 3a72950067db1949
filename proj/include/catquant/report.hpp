#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace catquant {

/// Pass/fail tally for one law, keeping the first counterexample.
struct LawCheck {
  std::string law;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  LawCheck() = default;
  explicit LawCheck(std::string name) : law(std::move(name)) {}

  bool ok() const noexcept { return failed == 0; }

  template <class Describe>
  void record(bool pass, Describe&& describe) {
    ++checked;
    if (pass) return;
    if (failed++ == 0) first_failure = describe();
  }
};

inline bool all_ok(const std::vector<LawCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

}  // namespace catquant
