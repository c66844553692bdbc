#ifndef ARTEMIS_RNG_HPP
#define ARTEMIS_RNG_HPP

#include <cstdint>
#include <cstring>
#include <string>

#include "artemis/sha256.hpp"

namespace artemis {

// Seedable deterministic generator (SHA-256 in counter mode). All prover
// randomness flows through an injected instance of this class so that a fixed
// seed reproduces proofs byte for byte.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        ByteWriter w;
        w.tag("rng0");
        w.u64(seed);
        key_ = sha256(w.data());
    }
    explicit Rng(const Bytes& seed) {
        ByteWriter w;
        w.tag("rng0");
        w.raw(seed);
        key_ = sha256(w.data());
    }

    void fill(uint8_t* out, size_t n) {
        while (n > 0) {
            if (avail_ == 0) refill();
            size_t take = n < avail_ ? n : avail_;
            std::memcpy(out, block_.data() + (32 - avail_), take);
            out += take;
            n -= take;
            avail_ -= take;
        }
    }

    uint64_t next_u64() {
        uint8_t b[8];
        fill(b, 8);
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) v |= uint64_t(b[i]) << (8 * i);
        return v;
    }

    // Uniform in [0, bound).
    uint64_t next_below(uint64_t bound) {
        // rejection from the top to avoid modulo bias
        uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % bound);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    // Derive an independent child stream (used to hand sub-components their
    // own randomness without coupling draw order).
    Rng fork(const std::string& label) {
        ByteWriter w;
        w.tag("fork");
        w.raw(key_.data(), key_.size());
        w.u64(counter_++);
        w.raw(reinterpret_cast<const uint8_t*>(label.data()), label.size());
        Rng child(0);
        child.key_ = sha256(w.data());
        child.counter_ = 0;
        child.avail_ = 0;
        return child;
    }

  private:
    void refill() {
        ByteWriter w;
        w.raw(key_.data(), key_.size());
        w.u64(counter_++);
        block_ = sha256(w.data());
        avail_ = 32;
    }

    Digest key_{};
    Digest block_{};
    uint64_t counter_ = 0;
    size_t avail_ = 0;
};

} // namespace artemis

#endif
