#include "artemis/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace artemis {

Digest sha256(const uint8_t* data, size_t len) {
    Digest out{};
    unsigned int outlen = 0;
    if (EVP_Digest(data, len, out.data(), &outlen, EVP_sha256(), nullptr) != 1 || outlen != 32)
        throw std::runtime_error("sha256 failed");
    return out;
}

} // namespace artemis
