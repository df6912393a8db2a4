#pragma once

namespace qcss {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qcss
