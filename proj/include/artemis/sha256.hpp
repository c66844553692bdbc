#ifndef ARTEMIS_SHA256_HPP
#define ARTEMIS_SHA256_HPP

#include <array>
#include <cstdint>
#include <cstddef>

#include "artemis/bytes.hpp"

namespace artemis {

using Digest = std::array<uint8_t, 32>;

Digest sha256(const uint8_t* data, size_t len);
inline Digest sha256(const Bytes& b) { return sha256(b.data(), b.size()); }

} // namespace artemis

#endif
