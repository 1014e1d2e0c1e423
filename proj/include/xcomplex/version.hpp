#ifndef XCOMPLEX_VERSION_HPP
#define XCOMPLEX_VERSION_HPP

namespace xcomplex {
inline constexpr const char* version = "0.1.0";
}

#endif
