#pragma once

namespace pivotgraph {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace pivotgraph
