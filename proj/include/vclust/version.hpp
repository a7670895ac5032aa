#ifndef VCLUST_VERSION_HPP
#define VCLUST_VERSION_HPP

namespace vclust {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
