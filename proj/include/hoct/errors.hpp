#pragma once

#include <stdexcept>
#include <string>

namespace hoct {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem / stream failures.
struct IoError : Error {
    using Error::Error;
};

// Malformed .hoct container or tree header.
struct FormatError : Error {
    enum class Kind {
        bad_magic,
        unsupported_version,
        truncated_file,
        truncated_header,
        child_count_overflow,
    };

    FormatError(Kind k, const std::string& msg) : Error(msg), kind(k) {}

    Kind kind;
};

// Transform output failed the internal inverse check.
struct VerificationError : Error {
    using Error::Error;
};

}  // namespace hoct
