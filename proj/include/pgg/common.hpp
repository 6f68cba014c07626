#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pgg {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// precondition / argument-range violations
class domain_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

// FNV-1a 64-bit, used for the gap cache payload and the zeros fixture checksum
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t h = 14695981039346656037ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace pgg
