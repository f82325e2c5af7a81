#pragma once

#include <string>

namespace ksg {

// hex digest of the SHA-256 of the given bytes
std::string sha256_hex(const std::string& data);

}  // namespace ksg
