#ifndef CHERN_VERSION_HPP
#define CHERN_VERSION_HPP

namespace chern {

inline constexpr const char* version_string = "0.1.0";

} // namespace chern

#endif
