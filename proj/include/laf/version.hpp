#ifndef LAF_VERSION_HPP
#define LAF_VERSION_HPP

namespace laf {

inline constexpr const char* kVersion = "0.1.0";

} // namespace laf

#endif
