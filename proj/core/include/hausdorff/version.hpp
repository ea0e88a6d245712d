#pragma once

namespace hausdorff {

inline constexpr const char* version_string = "0.1.0";

} // namespace hausdorff
