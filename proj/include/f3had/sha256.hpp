// Minimal SHA-256, used to digest canonical forms into fixed-size
// certificates.  Byte order of all multi-byte values fed by callers is
// little-endian by convention; the digest itself follows FIPS 180-4.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace f3had {

class Sha256 {
public:
    Sha256() { reset(); }
    void reset();
    void update(const void* data, size_t len);
    void update_u32(uint32_t v) {  // little-endian
        const uint8_t b[4] = {uint8_t(v), uint8_t(v >> 8), uint8_t(v >> 16), uint8_t(v >> 24)};
        update(b, 4);
    }
    void update_u64(uint64_t v) {
        update_u32(uint32_t(v));
        update_u32(uint32_t(v >> 32));
    }
    std::array<uint8_t, 32> digest();  // finalizes; do not reuse without reset()

private:
    void process_block(const uint8_t* p);
    uint32_t state_[8];
    uint64_t bitlen_;
    uint8_t buf_[64];
    size_t buflen_;
};

std::string hex_digest(const std::array<uint8_t, 32>& d);

}  // namespace f3had
