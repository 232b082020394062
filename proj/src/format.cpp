#include "questions/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace questions {

namespace {

int significant_digits(const char* s) {
    int digits = 0;
    bool counting = false;
    for (const char* p = s; *p && *p != 'e' && *p != 'E'; ++p) {
        if (*p >= '1' && *p <= '9') {
            counting = true;
            ++digits;
        } else if (*p == '0' && counting) {
            ++digits;
        }
    }
    return digits;
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";

    char shortest[64];
    auto res = std::to_chars(shortest, shortest + sizeof(shortest) - 1, value);
    *res.ptr = '\0';
    if (significant_digits(shortest) <= 14) return shortest;

    char capped[64];
    std::snprintf(capped, sizeof(capped), "%.14g", value);
    return capped;
}

}  // namespace questions
