#pragma once

namespace atl {

inline constexpr const char* kToolName = "atl";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace atl
