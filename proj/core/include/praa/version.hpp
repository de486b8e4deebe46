#pragma once

namespace praa {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace praa
