#ifndef DESSINFORGE_VERSION_HPP
#define DESSINFORGE_VERSION_HPP

namespace dessinforge {

inline constexpr const char* kVersion = "0.1.0";

} // namespace dessinforge

#endif
