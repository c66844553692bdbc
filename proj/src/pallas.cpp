#include "artemis/pallas.hpp"

#include "artemis/sha256.hpp"

namespace artemis {

namespace {
const PallasBase kCurveB = PallasBase::from_u64(5);
}

PallasPoint PallasPoint::generator() {
    // (-1, 2): (-1)^3 + 5 = 4 = 2^2
    return from_affine(-PallasBase::one(), PallasBase::from_u64(2));
}

PallasPoint PallasPoint::from_affine(const Base& x, const Base& y) {
    PallasPoint p;
    p.x_ = x;
    p.y_ = y;
    p.z_ = Base::one();
    return p;
}

PallasPoint PallasPoint::dbl() const {
    if (is_identity()) return *this;
    // a = 0 doubling
    Base a = x_.square();
    Base b = y_.square();
    Base c = b.square();
    Base d = ((x_ + b).square() - a - c);
    d = d + d;
    Base e = a + a + a;
    Base f = e.square();
    PallasPoint r;
    r.x_ = f - (d + d);
    Base c8 = c + c;
    c8 = c8 + c8;
    c8 = c8 + c8;
    r.y_ = e * (d - r.x_) - c8;
    r.z_ = (y_ * z_);
    r.z_ = r.z_ + r.z_;
    return r;
}

PallasPoint PallasPoint::operator+(const PallasPoint& o) const {
    if (is_identity()) return o;
    if (o.is_identity()) return *this;
    static const Base kOne = Base::one();
    if (o.z_ == kOne) {
        // mixed addition (affine second operand)
        Base z1z1 = z_.square();
        Base u2 = o.x_ * z1z1;
        Base s2 = o.y_ * z1z1 * z_;
        if (x_ == u2) {
            if (y_ == s2) return dbl();
            return identity();
        }
        Base h = u2 - x_;
        Base hh = h.square();
        Base i = hh + hh;
        i = i + i;
        Base j = h * i;
        Base rr = s2 - y_;
        rr = rr + rr;
        Base v = x_ * i;
        PallasPoint out;
        out.x_ = rr.square() - j - (v + v);
        Base yj = y_ * j;
        out.y_ = rr * (v - out.x_) - (yj + yj);
        out.z_ = (z_ + h).square() - z1z1 - hh;
        return out;
    }
    Base z1z1 = z_.square();
    Base z2z2 = o.z_.square();
    Base u1 = x_ * z2z2;
    Base u2 = o.x_ * z1z1;
    Base s1 = y_ * z2z2 * o.z_;
    Base s2 = o.y_ * z1z1 * z_;
    if (u1 == u2) {
        if (s1 == s2) return dbl();
        return identity();
    }
    Base h = u2 - u1;
    Base i = (h + h).square();
    Base j = h * i;
    Base rr = (s2 - s1);
    rr = rr + rr;
    Base v = u1 * i;
    PallasPoint out;
    out.x_ = rr.square() - j - (v + v);
    Base s1j = s1 * j;
    out.y_ = rr * (v - out.x_) - (s1j + s1j);
    out.z_ = ((z_ + o.z_).square() - z1z1 - z2z2) * h;
    return out;
}

PallasPoint PallasPoint::operator-() const {
    if (is_identity()) return *this;
    PallasPoint r = *this;
    r.y_ = -r.y_;
    return r;
}

PallasPoint PallasPoint::mul(const Scalar& s) const {
    auto limbs = s.canonical();
    // 4-bit fixed window
    PallasPoint table[16];
    table[0] = identity();
    table[1] = *this;
    for (int i = 2; i < 16; i++) table[i] = table[i - 1] + *this;
    PallasPoint acc = identity();
    bool started = false;
    for (int i = 3; i >= 0; i--) {
        for (int w = 15; w >= 0; w--) {
            if (started) {
                acc = acc.dbl();
                acc = acc.dbl();
                acc = acc.dbl();
                acc = acc.dbl();
            }
            uint64_t digit = (limbs[i] >> (4 * w)) & 0xf;
            if (digit) {
                acc = acc + table[digit];
                started = true;
            }
        }
    }
    return acc;
}

bool PallasPoint::operator==(const PallasPoint& o) const {
    if (is_identity() || o.is_identity()) return is_identity() == o.is_identity();
    Base z1z1 = z_.square();
    Base z2z2 = o.z_.square();
    if (x_ * z2z2 != o.x_ * z1z1) return false;
    return y_ * z2z2 * o.z_ == o.y_ * z1z1 * z_;
}

std::pair<PallasBase, PallasBase> PallasPoint::to_affine() const {
    Base zinv = z_.inverse();
    Base zinv2 = zinv.square();
    return {x_ * zinv2, y_ * zinv2 * zinv};
}

void PallasPoint::to_bytes(ByteWriter& w) const {
    if (is_identity()) {
        for (int i = 0; i < 32; i++) w.u8(0);
        w.u8(0);
        return;
    }
    auto [x, y] = to_affine();
    x.to_bytes(w);
    w.u8(uint8_t(2 + (y.canonical()[0] & 1)));
}

PallasPoint PallasPoint::from_bytes(ByteReader& r) {
    Base x = Base::from_bytes(r);
    uint8_t flag = r.u8();
    if (flag == 0) {
        if (!x.is_zero()) throw ProofDecodeError("bad identity encoding");
        return identity();
    }
    if (flag != 2 && flag != 3) throw ProofDecodeError("bad point flag");
    Base rhs = x.square() * x + kCurveB;
    if (!rhs.is_square()) throw ProofDecodeError("x not on curve");
    Base y = rhs.sqrt();
    if (y.square() != rhs) throw ProofDecodeError("x not on curve");
    if ((y.canonical()[0] & 1) != uint64_t(flag - 2)) y = -y;
    return from_affine(x, y);
}

PallasPoint PallasPoint::hash_to_group(const std::string& label, const Bytes& seed,
                                       uint64_t index) {
    for (uint64_t ctr = 0;; ctr++) {
        ByteWriter w;
        w.tag("a2gp");
        w.u64(label.size());
        w.raw(reinterpret_cast<const uint8_t*>(label.data()), label.size());
        w.u64(seed.size());
        w.raw(seed);
        w.u64(index);
        w.u64(ctr);
        Digest d = sha256(w.data());
        detail::Limbs l{};
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 8; j++) l[i] |= uint64_t(d[8 * i + j]) << (8 * j);
        l[3] &= (uint64_t(1) << 62) - 1; // stay below 2^254 < p
        Bytes canon;
        {
            ByteWriter cw;
            for (int i = 0; i < 4; i++) cw.u64(l[i]);
            canon = cw.take();
        }
        ByteReader cr(canon);
        Base x = Base::from_bytes(cr);
        Base rhs = x.square() * x + kCurveB;
        if (!rhs.is_square()) continue;
        Base y = rhs.sqrt();
        if (y.square() != rhs || y.is_zero()) continue;
        if (y.canonical()[0] & 1) y = -y;
        return from_affine(x, y);
    }
}

PallasPoint PallasPoint::msm(const std::vector<PallasPoint>& points,
                             const std::vector<Scalar>& scalars) {
    if (points.size() != scalars.size()) throw DomainSizeMismatch("msm size mismatch");
    size_t n = points.size();
    if (n == 0) return identity();
    if (n < 8) {
        PallasPoint acc = identity();
        for (size_t i = 0; i < n; i++) acc = acc + points[i].mul(scalars[i]);
        return acc;
    }
    // Pippenger bucket method; window tuned so bucket aggregation stays a
    // small fraction of the bucket fills
    unsigned c = 4;
    while ((size_t(1) << (c + 4)) < n && c < 16) c++;
    const unsigned bits = 255;
    const unsigned windows = (bits + c - 1) / c;
    std::vector<detail::Limbs> canon(n);
    for (size_t i = 0; i < n; i++) canon[i] = scalars[i].canonical();

    auto digit = [&](size_t i, unsigned w) -> uint64_t {
        unsigned lo = w * c;
        unsigned limb = lo / 64;
        unsigned off = lo % 64;
        uint64_t v = canon[i][limb] >> off;
        if (off + c > 64 && limb + 1 < 4) v |= canon[i][limb + 1] << (64 - off);
        return v & ((uint64_t(1) << c) - 1);
    };

    PallasPoint result = identity();
    std::vector<PallasPoint> buckets(size_t(1) << c);
    for (int w = int(windows) - 1; w >= 0; w--) {
        for (unsigned k = 0; k < c; k++) result = result.dbl();
        for (auto& b : buckets) b = identity();
        for (size_t i = 0; i < n; i++) {
            uint64_t d = digit(i, unsigned(w));
            if (d) buckets[d] += points[i];
        }
        PallasPoint running = identity();
        PallasPoint sum = identity();
        for (size_t k = buckets.size() - 1; k >= 1; k--) {
            running += buckets[k];
            sum += running;
        }
        result += sum;
    }
    return result;
}

} // namespace artemis
