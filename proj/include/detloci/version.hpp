#pragma once

namespace detloci {
inline constexpr const char* kVersion = "0.1.0";
}
