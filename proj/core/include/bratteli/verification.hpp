#ifndef BRATTELI_VERIFICATION_HPP
#define BRATTELI_VERIFICATION_HPP

#include <optional>
#include <string>
#include <vector>

namespace bratteli {

/// Outcome of one mechanically checked identity. A failed check is data,
/// not an exception.
struct VerificationItem {
  std::string check;
  bool ok = true;
  std::optional<std::size_t> level;  // 0-based, when the check is per level
  std::string detail;
};

inline bool all_ok(const std::vector<VerificationItem>& items) {
  for (const auto& i : items) {
    if (!i.ok) return false;
  }
  return true;
}

}  // namespace bratteli

#endif  // BRATTELI_VERIFICATION_HPP
