#pragma once

namespace braidkc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace braidkc
