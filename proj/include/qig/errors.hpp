#pragma once

#include <stdexcept>
#include <string>

namespace qig {

// Bad user-supplied parameters, field spec, or config file. CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap would be exceeded. CLI exit code 3.
struct ResourceCapError : std::runtime_error {
    ResourceCapError(const std::string& msg, std::string needed, std::string cap)
        : std::runtime_error(msg), needed(std::move(needed)), cap(std::move(cap)) {}
    std::string needed;
    std::string cap;
};

// A machine-checked guarantee failed (a theorem replay or a certificate
// validation). If one of these fires the build is wrong, not the input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Graph cache problems: bad magic, version mismatch, truncation, bad checksum.
struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qig
