#pragma once

namespace lagasym {

inline constexpr const char* version = "0.1.0";

}  // namespace lagasym
