#pragma once

#include <fmt/format.h>

#include <cstdlib>
#include <string>

namespace pchbf::detail
{

// Value as printed with 12 significant digits, so serializers that emit the
// shortest round-trip form print at most 12 digits.
inline double round_sig12(double x)
{
    const std::string s = fmt::format("{:.12g}", x);
    return std::strtod(s.c_str(), nullptr);
}

} // namespace pchbf::detail
