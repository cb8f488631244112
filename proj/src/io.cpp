#include "dccrisk/io.hpp"

#include <cstdio>

namespace dccrisk {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace dccrisk
