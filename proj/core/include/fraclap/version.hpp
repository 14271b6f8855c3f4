#pragma once

namespace fraclap {

inline constexpr const char* version_tag = "0.1.0";

}  // namespace fraclap
