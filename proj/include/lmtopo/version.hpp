#pragma once

namespace lmtopo {

inline constexpr const char* tool_name = "lmtopo";
inline constexpr const char* tool_version = "0.1.0";

} // namespace lmtopo
