#ifndef ARTEMIS_MONT_FIELD_HPP
#define ARTEMIS_MONT_FIELD_HPP

#include <array>
#include <cstdint>
#include <cstring>

#include "artemis/bytes.hpp"
#include "artemis/errors.hpp"
#include "artemis/rng.hpp"

namespace artemis {

namespace detail {

using u128 = unsigned __int128;
using Limbs = std::array<uint64_t, 4>;

constexpr bool geq(const Limbs& a, const Limbs& b) {
    for (int i = 3; i >= 0; i--) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return true;
}

constexpr Limbs sub_limbs(const Limbs& a, const Limbs& b) {
    Limbs out{};
    uint64_t borrow = 0;
    for (int i = 0; i < 4; i++) {
        uint64_t bi = b[i] + borrow;
        uint64_t nb = (bi < b[i]) || (a[i] < bi) ? 1 : 0;
        out[i] = a[i] - bi;
        borrow = nb;
    }
    return out;
}

constexpr Limbs double_mod(const Limbs& a, const Limbs& p) {
    Limbs out{};
    uint64_t carry = 0;
    for (int i = 0; i < 4; i++) {
        out[i] = (a[i] << 1) | carry;
        carry = a[i] >> 63;
    }
    if (carry || geq(out, p)) out = sub_limbs(out, p);
    return out;
}

constexpr Limbs pow2_mod(unsigned k, const Limbs& p) {
    Limbs r{1, 0, 0, 0};
    for (unsigned i = 0; i < k; i++) r = double_mod(r, p);
    return r;
}

constexpr uint64_t mont_neg_inv(uint64_t p0) {
    uint64_t x = 1;
    for (int i = 0; i < 8; i++) x *= 2 - p0 * x;
    return ~x + 1;
}

constexpr unsigned bit_length(const Limbs& p) {
    for (int i = 3; i >= 0; i--) {
        if (p[i] == 0) continue;
        uint64_t v = p[i];
        unsigned b = 0;
        while (v) {
            v >>= 1;
            b++;
        }
        return unsigned(i) * 64 + b;
    }
    return 0;
}

} // namespace detail

// Prime field element in Montgomery form, four 64-bit limbs. Params supplies
// the modulus, a multiplicative generator, and the two-adicity of p-1.
template <typename Params>
class MontField {
  public:
    using Limbs = detail::Limbs;
    static constexpr Limbs P = Params::MODULUS;
    static constexpr uint32_t TWO_ADICITY = Params::TWO_ADICITY;
    static constexpr size_t BYTES = 32;
    static constexpr unsigned BITS = detail::bit_length(Params::MODULUS);

    constexpr MontField() : v_{0, 0, 0, 0} {}

    static MontField zero() { return MontField(); }
    static MontField one() { return from_u64(1); }

    static MontField from_u64(uint64_t x) {
        MontField r;
        r.v_ = mont_mul(Limbs{x, 0, 0, 0}, R2);
        return r;
    }

    static MontField from_i64(int64_t x) {
        if (x >= 0) return from_u64(uint64_t(x));
        return -from_u64(uint64_t(-(x + 1)) + 1);
    }

    static MontField generator() { return from_u64(Params::GENERATOR); }

    // canonical residue, little-endian limbs
    Limbs canonical() const { return redc_narrow(v_); }

    bool is_zero() const { return v_ == Limbs{0, 0, 0, 0}; }

    friend bool operator==(const MontField& a, const MontField& b) { return a.v_ == b.v_; }
    friend bool operator!=(const MontField& a, const MontField& b) { return a.v_ != b.v_; }

    MontField operator+(const MontField& o) const {
        MontField r;
        uint64_t carry = 0;
        for (int i = 0; i < 4; i++) {
            detail::u128 cur = detail::u128(v_[i]) + o.v_[i] + carry;
            r.v_[i] = uint64_t(cur);
            carry = uint64_t(cur >> 64);
        }
        if (carry || detail::geq(r.v_, P)) r.v_ = detail::sub_limbs(r.v_, P);
        return r;
    }

    MontField operator-(const MontField& o) const {
        MontField r;
        uint64_t borrow = 0;
        for (int i = 0; i < 4; i++) {
            uint64_t bi = o.v_[i] + borrow;
            uint64_t nb = (bi < o.v_[i]) || (v_[i] < bi) ? 1 : 0;
            r.v_[i] = v_[i] - bi;
            borrow = nb;
        }
        if (borrow) {
            uint64_t carry = 0;
            for (int i = 0; i < 4; i++) {
                detail::u128 cur = detail::u128(r.v_[i]) + P[i] + carry;
                r.v_[i] = uint64_t(cur);
                carry = uint64_t(cur >> 64);
            }
        }
        return r;
    }

    MontField operator-() const { return is_zero() ? *this : zero() - *this; }

    MontField operator*(const MontField& o) const {
        MontField r;
        r.v_ = mont_mul(v_, o.v_);
        return r;
    }

    MontField& operator+=(const MontField& o) { return *this = *this + o; }
    MontField& operator-=(const MontField& o) { return *this = *this - o; }
    MontField& operator*=(const MontField& o) { return *this = *this * o; }

    MontField square() const { return *this * *this; }

    MontField pow(uint64_t e) const { return pow_limbs(Limbs{e, 0, 0, 0}); }

    MontField pow_limbs(const Limbs& e) const {
        MontField base = *this;
        MontField acc = one();
        for (int i = 0; i < 4; i++) {
            uint64_t w = e[i];
            for (int b = 0; b < 64; b++) {
                // left-to-right would need bit length; right-to-left is fine
                if (w & 1) acc *= base;
                base = base.square();
                w >>= 1;
            }
        }
        return acc;
    }

    MontField inverse() const {
        if (is_zero()) throw InverseOfZero();
        Limbs e = detail::sub_limbs(P, Limbs{2, 0, 0, 0});
        return pow_limbs(e);
    }

    bool is_square() const {
        if (is_zero()) return true;
        Limbs e = detail::sub_limbs(P, Limbs{1, 0, 0, 0});
        // (p-1)/2
        for (int i = 0; i < 3; i++) e[i] = (e[i] >> 1) | (e[i + 1] << 63);
        e[3] >>= 1;
        return pow_limbs(e) == one();
    }

    // Tonelli-Shanks. Caller must check is_square() first.
    MontField sqrt() const {
        if (is_zero()) return zero();
        // p - 1 = 2^S * t with t odd
        Limbs t = detail::sub_limbs(P, Limbs{1, 0, 0, 0});
        for (uint32_t i = 0; i < TWO_ADICITY; i++) {
            for (int j = 0; j < 3; j++) t[j] = (t[j] >> 1) | (t[j + 1] << 63);
            t[3] >>= 1;
        }
        MontField z = generator().pow_limbs(t); // order 2^S
        // (t+1)/2
        Limbs th = t;
        uint64_t carry = 1;
        for (int i = 0; i < 4 && carry; i++) {
            th[i] += carry;
            carry = th[i] == 0 ? 1 : 0;
        }
        for (int j = 0; j < 3; j++) th[j] = (th[j] >> 1) | (th[j + 1] << 63);
        th[3] >>= 1;

        MontField x = pow_limbs(th);
        MontField b = pow_limbs(t);
        uint32_t m = TWO_ADICITY;
        while (b != one()) {
            MontField bb = b;
            uint32_t i = 0;
            while (bb != one()) {
                bb = bb.square();
                i++;
                if (i == m) return zero(); // not a square
            }
            MontField e = z;
            for (uint32_t j = 0; j < m - i - 1; j++) e = e.square();
            z = e.square();
            b = b * z;
            x = x * e;
            m = i;
        }
        return x;
    }

    // primitive 2^log_n root of unity
    static MontField root_of_unity(uint32_t log_n) {
        if (log_n > TWO_ADICITY) throw DomainSizeMismatch("two-adicity exceeded");
        Limbs t = detail::sub_limbs(P, Limbs{1, 0, 0, 0});
        for (uint32_t i = 0; i < TWO_ADICITY; i++) {
            for (int j = 0; j < 3; j++) t[j] = (t[j] >> 1) | (t[j + 1] << 63);
            t[3] >>= 1;
        }
        MontField root = generator().pow_limbs(t);
        for (uint32_t i = log_n; i < TWO_ADICITY; i++) root = root.square();
        return root;
    }

    static MontField random(Rng& rng) {
        constexpr uint64_t top_mask =
            (BITS % 64 == 0) ? ~uint64_t(0) : ((uint64_t(1) << (BITS % 64)) - 1);
        Limbs l{};
        do {
            for (int i = 0; i < 4; i++) l[i] = rng.next_u64();
            l[3] &= top_mask;
        } while (detail::geq(l, P));
        MontField r;
        r.v_ = mont_mul(l, R2);
        return r;
    }

    void to_bytes(ByteWriter& w) const {
        Limbs c = canonical();
        for (int i = 0; i < 4; i++) w.u64(c[i]);
    }

    Bytes to_bytes() const {
        ByteWriter w;
        to_bytes(w);
        return w.take();
    }

    static MontField from_bytes(ByteReader& r) {
        Limbs l{};
        for (int i = 0; i < 4; i++) l[i] = r.u64();
        if (detail::geq(l, P)) throw ProofDecodeError("non-canonical field element");
        MontField f;
        f.v_ = mont_mul(l, R2);
        return f;
    }

    // 64 little-endian bytes reduced mod p (transcript challenges)
    static MontField from_wide_bytes(const uint8_t bytes[64]) {
        Limbs lo{}, hi{};
        for (int i = 0; i < 4; i++) {
            uint64_t v = 0;
            for (int j = 0; j < 8; j++) v |= uint64_t(bytes[8 * i + j]) << (8 * j);
            lo[i] = v;
        }
        for (int i = 0; i < 4; i++) {
            uint64_t v = 0;
            for (int j = 0; j < 8; j++) v |= uint64_t(bytes[32 + 8 * i + j]) << (8 * j);
            hi[i] = v;
        }
        MontField a, b, shift;
        a.v_ = mont_mul(lo, R2);
        b.v_ = mont_mul(hi, R2);
        shift.v_ = mont_mul(R_MOD_P, R2); // represents 2^256
        return a + b * shift;
    }

  private:
    static constexpr Limbs R_MOD_P = detail::pow2_mod(256, Params::MODULUS);
    static constexpr Limbs R2 = detail::pow2_mod(512, Params::MODULUS);
    static constexpr uint64_t NEG_INV = detail::mont_neg_inv(Params::MODULUS[0]);

    // fused CIOS Montgomery multiplication (p < 2^255 so the carry limb
    // stays in {0, 1} and one conditional subtraction suffices)
    static Limbs mont_mul(const Limbs& a, const Limbs& b) {
        using detail::u128;
        uint64_t t0 = 0, t1 = 0, t2 = 0, t3 = 0, t4 = 0, t5 = 0;
        for (int i = 0; i < 4; i++) {
            u128 cur = u128(a[i]) * b[0] + t0;
            t0 = uint64_t(cur);
            u128 c = cur >> 64;
            cur = u128(a[i]) * b[1] + t1 + c;
            t1 = uint64_t(cur);
            c = cur >> 64;
            cur = u128(a[i]) * b[2] + t2 + c;
            t2 = uint64_t(cur);
            c = cur >> 64;
            cur = u128(a[i]) * b[3] + t3 + c;
            t3 = uint64_t(cur);
            c = cur >> 64;
            cur = u128(t4) + c;
            t4 = uint64_t(cur);
            t5 = uint64_t(cur >> 64);

            uint64_t m = t0 * NEG_INV;
            cur = u128(m) * P[0] + t0;
            c = cur >> 64;
            cur = u128(m) * P[1] + t1 + c;
            t0 = uint64_t(cur);
            c = cur >> 64;
            cur = u128(m) * P[2] + t2 + c;
            t1 = uint64_t(cur);
            c = cur >> 64;
            cur = u128(m) * P[3] + t3 + c;
            t2 = uint64_t(cur);
            c = cur >> 64;
            cur = u128(t4) + c;
            t3 = uint64_t(cur);
            c = cur >> 64;
            t4 = t5 + uint64_t(c);
        }
        Limbs out{t0, t1, t2, t3};
        if (t4 || detail::geq(out, P)) out = detail::sub_limbs(out, P);
        return out;
    }

    static Limbs redc_narrow(const Limbs& a) { return mont_mul(a, Limbs{1, 0, 0, 0}); }

    Limbs v_;
};

} // namespace artemis

#endif
