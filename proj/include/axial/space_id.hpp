#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "axial/errors.hpp"

namespace axial {

/// Name of one convex space / axial line. Case-sensitive token of
/// letters, digits and underscores; validated on construction.
class SpaceId {
 public:
  explicit SpaceId(std::string name) : name_(std::move(name)) {
    if (!is_valid(name_)) throw InvalidSpaceNameError(name_);
  }

  static bool is_valid(std::string_view name) noexcept {
    if (name.empty()) return false;
    for (char c : name) {
      const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_';
      if (!ok) return false;
    }
    return true;
  }

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
  friend std::strong_ordering operator<=>(const SpaceId& a, const SpaceId& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

/// Default carrier-space name: the exterior of the settlement.
inline const std::string kDefaultRootName = "outside";

}  // namespace axial
