#pragma once

namespace cliquevec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cliquevec
