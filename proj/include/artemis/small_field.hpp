#ifndef ARTEMIS_SMALL_FIELD_HPP
#define ARTEMIS_SMALL_FIELD_HPP

#include <cstdint>

#include "artemis/bytes.hpp"
#include "artemis/errors.hpp"
#include "artemis/rng.hpp"

namespace artemis {

// Word-sized prime field for hand-checkable oracle tests. Not constant-time,
// not for production use.
template <uint64_t MOD, uint64_t GEN>
class SmallField {
    static constexpr uint32_t compute_two_adicity() {
        uint64_t t = MOD - 1;
        uint32_t s = 0;
        while ((t & 1) == 0) {
            t >>= 1;
            s++;
        }
        return s;
    }

  public:
    static constexpr uint64_t MODULUS = MOD;
    static constexpr uint32_t TWO_ADICITY = compute_two_adicity();
    static constexpr size_t BYTES = 8;
    static constexpr unsigned BITS = 64 - __builtin_clzll(MOD);

    constexpr SmallField() : v_(0) {}
    constexpr explicit SmallField(uint64_t v) : v_(v % MOD) {}

    static SmallField zero() { return SmallField(); }
    static SmallField one() { return SmallField(1); }
    static SmallField from_u64(uint64_t v) { return SmallField(v); }
    static SmallField from_i64(int64_t v) {
        if (v >= 0) return SmallField(uint64_t(v));
        return -SmallField(uint64_t(-(v + 1)) + 1);
    }
    static SmallField generator() { return SmallField(GEN); }

    uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(const SmallField& a, const SmallField& b) { return a.v_ == b.v_; }
    friend bool operator!=(const SmallField& a, const SmallField& b) { return a.v_ != b.v_; }

    SmallField operator+(const SmallField& o) const { return SmallField(v_ + o.v_); }
    SmallField operator-(const SmallField& o) const { return SmallField(v_ + MOD - o.v_); }
    SmallField operator-() const { return SmallField(MOD - v_); }
    SmallField operator*(const SmallField& o) const {
        return SmallField(uint64_t((unsigned __int128)(v_)*o.v_ % MOD));
    }
    SmallField& operator+=(const SmallField& o) { return *this = *this + o; }
    SmallField& operator-=(const SmallField& o) { return *this = *this - o; }
    SmallField& operator*=(const SmallField& o) { return *this = *this * o; }

    SmallField square() const { return *this * *this; }

    SmallField pow(uint64_t e) const {
        SmallField base = *this, acc = one();
        while (e) {
            if (e & 1) acc *= base;
            base = base.square();
            e >>= 1;
        }
        return acc;
    }

    SmallField inverse() const {
        if (is_zero()) throw InverseOfZero();
        return pow(MOD - 2);
    }

    bool is_square() const { return is_zero() || pow((MOD - 1) / 2) == one(); }

    static SmallField root_of_unity(uint32_t log_n) {
        if (log_n > TWO_ADICITY) throw DomainSizeMismatch("two-adicity exceeded");
        uint64_t t = (MOD - 1) >> TWO_ADICITY;
        SmallField root = generator().pow(t);
        for (uint32_t i = log_n; i < TWO_ADICITY; i++) root = root.square();
        return root;
    }

    static SmallField random(Rng& rng) { return SmallField(rng.next_below(MOD)); }

    void to_bytes(ByteWriter& w) const { w.u64(v_); }
    Bytes to_bytes() const {
        ByteWriter w;
        to_bytes(w);
        return w.take();
    }
    static SmallField from_bytes(ByteReader& r) {
        uint64_t v = r.u64();
        if (v >= MOD) throw ProofDecodeError("non-canonical field element");
        return SmallField(v);
    }
    static SmallField from_wide_bytes(const uint8_t bytes[64]) {
        unsigned __int128 acc = 0;
        for (int i = 63; i >= 0; i--) acc = ((acc << 8) | bytes[i]) % MOD;
        return SmallField(uint64_t(acc));
    }

  private:
    uint64_t v_;
};

using F17 = SmallField<17, 3>;

} // namespace artemis

#endif
