#pragma once

#include <charconv>
#include <string>

namespace cpdetect {

// Shortest decimal string that parses back to exactly the same double.
inline std::string fmt_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

} // namespace cpdetect
