#ifndef ARTEMIS_TRANSCRIPT_HPP
#define ARTEMIS_TRANSCRIPT_HPP

#include <string>

#include "artemis/bytes.hpp"
#include "artemis/sha256.hpp"

namespace artemis {

// Fiat-Shamir transcript: a running SHA-256 state with domain-separation
// labels on every message. Identical message sequences yield identical
// challenges; every challenge is absorb-then-squeeze.
class Transcript {
  public:
    explicit Transcript(const std::string& protocol_label);

    void absorb_bytes(const std::string& label, const Bytes& data);
    void absorb_u64(const std::string& label, uint64_t v);

    template <typename T>
    void absorb(const std::string& label, const T& v) {
        absorb_bytes(label, v.to_bytes());
    }

    // 64 uniform-looking bytes bound to the current state
    std::array<uint8_t, 64> squeeze(const std::string& label);

    template <typename Fx>
    Fx challenge(const std::string& label) {
        auto wide = squeeze(label);
        return Fx::from_wide_bytes(wide.data());
    }

    template <typename Fx>
    Fx challenge_nonzero(const std::string& label) {
        for (;;) {
            Fx c = challenge<Fx>(label);
            if (!c.is_zero()) return c;
        }
    }

    // 128-bit challenge (folding rounds): the smaller space keeps soundness
    // at ~2^-128 while halving the scalar-multiplication chains
    template <typename Fx>
    Fx challenge_short_nonzero(const std::string& label) {
        for (;;) {
            auto wide = squeeze(label);
            uint8_t padded[64] = {0};
            std::memcpy(padded, wide.data(), 16);
            Fx c = Fx::from_wide_bytes(padded);
            if (!c.is_zero()) return c;
        }
    }

    const Digest& state() const { return state_; }

  private:
    Digest state_{};
};

} // namespace artemis

#endif
