#pragma once

namespace volrisk {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace volrisk
