#pragma once

#include <string>

namespace dccrisk {

// Shortest 17-significant-digit decimal form; used for every numeric CSV
// field so repeated runs diff cleanly.
std::string g17(double v);

}  // namespace dccrisk
