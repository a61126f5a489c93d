#pragma once

namespace mqs {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mqs
