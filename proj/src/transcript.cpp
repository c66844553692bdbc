#include "artemis/transcript.hpp"

namespace artemis {

namespace {
Bytes frame(const std::string& label, const Bytes& data) {
    ByteWriter w;
    w.u64(label.size());
    w.raw(reinterpret_cast<const uint8_t*>(label.data()), label.size());
    w.u64(data.size());
    w.raw(data);
    return w.take();
}
} // namespace

Transcript::Transcript(const std::string& protocol_label) {
    state_ = sha256(frame("protocol", Bytes(protocol_label.begin(), protocol_label.end())));
}

void Transcript::absorb_bytes(const std::string& label, const Bytes& data) {
    ByteWriter w;
    w.raw(state_.data(), state_.size());
    w.tag("absb");
    w.raw(frame(label, data));
    state_ = sha256(w.data());
}

void Transcript::absorb_u64(const std::string& label, uint64_t v) {
    ByteWriter w;
    w.u64(v);
    absorb_bytes(label, w.take());
}

std::array<uint8_t, 64> Transcript::squeeze(const std::string& label) {
    std::array<uint8_t, 64> out{};
    for (uint64_t i = 0; i < 2; i++) {
        ByteWriter w;
        w.raw(state_.data(), state_.size());
        w.tag("sqzb");
        w.raw(frame(label, {}));
        w.u64(i);
        Digest d = sha256(w.data());
        std::memcpy(out.data() + 32 * i, d.data(), 32);
    }
    // fold the squeeze back into the state so challenges are never reused
    ByteWriter w;
    w.raw(state_.data(), state_.size());
    w.tag("post");
    w.raw(out.data(), out.size());
    state_ = sha256(w.data());
    return out;
}

} // namespace artemis
