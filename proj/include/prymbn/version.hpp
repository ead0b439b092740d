#pragma once

namespace prymbn {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace prymbn
