#pragma once

namespace driftbound {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace driftbound
