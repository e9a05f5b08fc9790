#pragma once

#include <complex>

namespace gft {

using cplx = std::complex<double>;

inline constexpr const char* tool_version = "0.1.0";

} // namespace gft
