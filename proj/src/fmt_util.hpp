#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace scopeaudit::detail {

// Shortest decimal form that round-trips the exact double; locale-independent.
inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    for (int prec = 1; prec < 17; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
        if (std::strtod(shorter, nullptr) == v) return shorter;
    }
    return buf;
}

}  // namespace scopeaudit::detail
