#pragma once

namespace loopkit {

inline constexpr const char* kToolVersion = "loopkit 0.1.0";

}  // namespace loopkit
