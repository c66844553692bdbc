#ifndef ARTEMIS_SCHNORR_GROUP_HPP
#define ARTEMIS_SCHNORR_GROUP_HPP

#include <string>
#include <vector>

#include "artemis/bytes.hpp"
#include "artemis/sha256.hpp"
#include "artemis/small_field.hpp"

namespace artemis {

// Order-Q subgroup of Z_P^* written additively, for fast oracle tests of the
// commitment layer. NOT cryptographic: discrete logs in a word-sized group
// are trivial.
template <uint64_t P, uint64_t Q, uint64_t Q_GEN>
class SchnorrGroup {
    static_assert((P - 1) % Q == 0, "Q must divide P-1");

  public:
    using Scalar = SmallField<Q, Q_GEN>;
    static constexpr size_t BYTES = 8;

    SchnorrGroup() : v_(1) {}

    static SchnorrGroup identity() { return SchnorrGroup(); }

    static SchnorrGroup generator() {
        for (uint64_t x = 2; x < P; x++) {
            uint64_t e = pow_mod(x, (P - 1) / Q);
            if (e != 1) return SchnorrGroup(e);
        }
        return identity();
    }

    bool is_identity() const { return v_ == 1; }

    SchnorrGroup operator+(const SchnorrGroup& o) const {
        return SchnorrGroup(uint64_t((unsigned __int128)(v_)*o.v_ % P));
    }
    SchnorrGroup operator-() const { return SchnorrGroup(pow_mod(v_, P - 2)); }
    SchnorrGroup operator-(const SchnorrGroup& o) const { return *this + (-o); }
    SchnorrGroup& operator+=(const SchnorrGroup& o) { return *this = *this + o; }
    SchnorrGroup dbl() const { return *this + *this; }

    friend SchnorrGroup operator*(const Scalar& s, const SchnorrGroup& g) { return g.mul(s); }
    SchnorrGroup mul(const Scalar& s) const { return SchnorrGroup(pow_mod(v_, s.value())); }

    bool operator==(const SchnorrGroup& o) const { return v_ == o.v_; }
    bool operator!=(const SchnorrGroup& o) const { return v_ != o.v_; }

    void to_bytes(ByteWriter& w) const { w.u64(v_); }
    Bytes to_bytes() const {
        ByteWriter w;
        to_bytes(w);
        return w.take();
    }
    static SchnorrGroup from_bytes(ByteReader& r) {
        uint64_t v = r.u64();
        if (v == 0 || v >= P || pow_mod(v, Q) != 1) throw ProofDecodeError("not in subgroup");
        return SchnorrGroup(v);
    }

    static SchnorrGroup hash_to_group(const std::string& label, const Bytes& seed,
                                      uint64_t index) {
        for (uint64_t ctr = 0;; ctr++) {
            ByteWriter w;
            w.tag("s2gp");
            w.u64(label.size());
            w.raw(reinterpret_cast<const uint8_t*>(label.data()), label.size());
            w.u64(seed.size());
            w.raw(seed);
            w.u64(index);
            w.u64(ctr);
            Digest d = sha256(w.data());
            uint64_t x = 0;
            for (int i = 0; i < 8; i++) x |= uint64_t(d[i]) << (8 * i);
            x = x % (P - 1) + 1;
            uint64_t e = pow_mod(x, (P - 1) / Q);
            if (e != 1) return SchnorrGroup(e);
        }
    }

    static SchnorrGroup msm(const std::vector<SchnorrGroup>& points,
                            const std::vector<Scalar>& scalars) {
        if (points.size() != scalars.size()) throw DomainSizeMismatch("msm size mismatch");
        SchnorrGroup acc = identity();
        for (size_t i = 0; i < points.size(); i++) acc += points[i].mul(scalars[i]);
        return acc;
    }

  private:
    explicit SchnorrGroup(uint64_t v) : v_(v) {}

    static uint64_t pow_mod(uint64_t b, uint64_t e) {
        unsigned __int128 acc = 1, base = b % P;
        while (e) {
            if (e & 1) acc = acc * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return uint64_t(acc);
    }

    uint64_t v_;
};

// order-17 subgroup of Z_103^*; scalar field F_17
using TestGroup = SchnorrGroup<103, 17, 3>;

} // namespace artemis

#endif
