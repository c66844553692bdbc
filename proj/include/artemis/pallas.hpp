#ifndef ARTEMIS_PALLAS_HPP
#define ARTEMIS_PALLAS_HPP

#include <string>
#include <vector>

#include "artemis/bytes.hpp"
#include "artemis/fields.hpp"

namespace artemis {

// Prime-order group of the Pallas curve y^2 = x^3 + 5 over F_p, written
// additively. Scalar field is PallasScalar (the group order).
class PallasPoint {
  public:
    using Scalar = PallasScalar;
    using Base = PallasBase;
    static constexpr size_t BYTES = 33;

    PallasPoint() : x_(Base::zero()), y_(Base::one()), z_(Base::zero()) {}

    static PallasPoint identity() { return PallasPoint(); }
    static PallasPoint generator();
    static PallasPoint from_affine(const Base& x, const Base& y);

    bool is_identity() const { return z_.is_zero(); }

    PallasPoint dbl() const;
    PallasPoint operator+(const PallasPoint& o) const;
    PallasPoint operator-() const;
    PallasPoint operator-(const PallasPoint& o) const { return *this + (-o); }
    PallasPoint& operator+=(const PallasPoint& o) { return *this = *this + o; }

    friend PallasPoint operator*(const Scalar& s, const PallasPoint& p) { return p.mul(s); }
    PallasPoint mul(const Scalar& s) const;

    bool operator==(const PallasPoint& o) const;
    bool operator!=(const PallasPoint& o) const { return !(*this == o); }

    // (x, y) affine; must not be the identity
    std::pair<Base, Base> to_affine() const;

    void to_bytes(ByteWriter& w) const;
    Bytes to_bytes() const {
        ByteWriter w;
        to_bytes(w);
        return w.take();
    }
    static PallasPoint from_bytes(ByteReader& r);

    // deterministic try-and-increment map to a curve point with no known
    // discrete log relative to any other derived generator
    static PallasPoint hash_to_group(const std::string& label, const Bytes& seed, uint64_t index);

    static PallasPoint msm(const std::vector<PallasPoint>& points,
                           const std::vector<Scalar>& scalars);

  private:
    // Jacobian coordinates; z == 0 encodes the identity
    Base x_, y_, z_;
};

} // namespace artemis

#endif
