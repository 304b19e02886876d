#pragma once

namespace qgol {

inline constexpr const char *kVersion = "0.1.0";

} // namespace qgol
