#pragma once

namespace cplab {

inline constexpr const char* kToolName = "cplab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace cplab
