#pragma once

namespace fcamine {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fcamine
