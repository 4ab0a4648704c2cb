#pragma once

namespace fairlist {

inline constexpr const char* kVersion = "0.1.0";

} // namespace fairlist
