#pragma once

#include <string>

#include "embfp/types.hpp"

namespace embfp {

// ECF: "ECF1" magic, u32 count, u32 dim (little-endian), then N*n f64
// little-endian row-major. Endianness is explicit so files are portable.

void write_ecf(const std::string& path, const Cloud& cloud);
Cloud read_ecf(const std::string& path);

Cloud read_csv(const std::string& path);                      // optional header row
void write_csv(const std::string& path, const Cloud& cloud);  // 17 significant digits

}  // namespace embfp
