#pragma once

#include <string_view>

namespace kbsim {

inline constexpr std::string_view version = "0.1.0";

}  // namespace kbsim
