#pragma once

namespace pinwheel {

inline constexpr const char* kToolName = "pinwheel-lattice";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaTag = "pinwheel-lattice/v1";

} // namespace pinwheel
