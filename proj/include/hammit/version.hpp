#pragma once

namespace hammit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hammit
