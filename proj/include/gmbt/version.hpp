#pragma once

namespace gmbt {

inline constexpr const char* kToolName = "gmbacktest";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gmbt
