#pragma once

namespace parmax {

inline constexpr const char* version_string = "1.0.0";

}
