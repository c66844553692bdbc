#ifndef ARTEMIS_BYTES_HPP
#define ARTEMIS_BYTES_HPP

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "artemis/errors.hpp"

namespace artemis {

using Bytes = std::vector<uint8_t>;

// Little-endian primitive encoding plus the section-tagged container used by
// all binary file formats: [4-byte tag][u64 length][payload].

class ByteWriter {
  public:
    const Bytes& data() const { return buf_; }
    Bytes take() { return std::move(buf_); }

    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v) {
        for (int i = 0; i < 4; i++) buf_.push_back(uint8_t(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 0; i < 8; i++) buf_.push_back(uint8_t(v >> (8 * i)));
    }
    void raw(const uint8_t* p, size_t n) { buf_.insert(buf_.end(), p, p + n); }
    void raw(const Bytes& b) { raw(b.data(), b.size()); }
    void tag(const char (&t)[5]) { raw(reinterpret_cast<const uint8_t*>(t), 4); }

    void section(const char (&t)[5], const Bytes& payload) {
        tag(t);
        u64(payload.size());
        raw(payload);
    }

  private:
    Bytes buf_;
};

class ByteReader {
  public:
    explicit ByteReader(const Bytes& b) : buf_(b.data()), size_(b.size()) {}
    ByteReader(const uint8_t* p, size_t n) : buf_(p), size_(n) {}

    bool done() const { return pos_ == size_; }
    size_t remaining() const { return size_ - pos_; }

    uint8_t u8() {
        need(1);
        return buf_[pos_++];
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; i++) v |= uint32_t(buf_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) v |= uint64_t(buf_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }
    void raw(uint8_t* out, size_t n) {
        need(n);
        std::memcpy(out, buf_ + pos_, n);
        pos_ += n;
    }
    Bytes raw(size_t n) {
        need(n);
        Bytes out(buf_ + pos_, buf_ + pos_ + n);
        pos_ += n;
        return out;
    }
    void expect_tag(const char (&t)[5]) {
        need(4);
        if (std::memcmp(buf_ + pos_, t, 4) != 0)
            throw ProofDecodeError(std::string("bad section tag, expected ") + t);
        pos_ += 4;
    }
    Bytes section(const char (&t)[5]) {
        expect_tag(t);
        uint64_t n = u64();
        if (n > remaining()) throw ProofDecodeError("section length overruns buffer");
        return raw(size_t(n));
    }

  private:
    void need(size_t n) {
        if (size_ - pos_ < n) throw ProofDecodeError("unexpected end of input");
    }
    const uint8_t* buf_;
    size_t size_;
    size_t pos_ = 0;
};

} // namespace artemis

#endif
