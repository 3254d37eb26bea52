#pragma once

namespace ulam {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ulam
