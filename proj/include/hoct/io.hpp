#pragma once

#include <string>

#include "hoct/core.hpp"

namespace hoct {

// Whole-file helpers. Both throw IoError with the path in the message.
Bytes read_file(const std::string& path);
void write_file(const std::string& path, const Bytes& data);

}  // namespace hoct
