#pragma once

namespace qsurf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qsurf
