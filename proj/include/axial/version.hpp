#pragma once

#include <string_view>

namespace axial {

inline constexpr std::string_view kToolName = "axial";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace axial
