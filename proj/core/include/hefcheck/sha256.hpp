#pragma once

#include <string>
#include <string_view>

namespace hefcheck {

// SHA-256 digest as a lowercase hex string.
std::string sha256_hex(std::string_view bytes);

}  // namespace hefcheck
