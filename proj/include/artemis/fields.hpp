#ifndef ARTEMIS_FIELDS_HPP
#define ARTEMIS_FIELDS_HPP

#include "artemis/mont_field.hpp"
#include "artemis/small_field.hpp"

namespace artemis {

// Pallas curve: y^2 = x^3 + 5 over F_p, group order q. The scalar field of
// the proof system is F_q; curve coordinates live in F_p. Both moduli have
// two-adicity 32 and multiplicative generator 5.
struct PallasBaseParams {
    static constexpr detail::Limbs MODULUS = {0x992d30ed00000001ull, 0x224698fc094cf91bull,
                                              0x0000000000000000ull, 0x4000000000000000ull};
    static constexpr uint64_t GENERATOR = 5;
    static constexpr uint32_t TWO_ADICITY = 32;
};

struct PallasScalarParams {
    static constexpr detail::Limbs MODULUS = {0x8c46eb2100000001ull, 0x224698fc0994a8ddull,
                                              0x0000000000000000ull, 0x4000000000000000ull};
    static constexpr uint64_t GENERATOR = 5;
    static constexpr uint32_t TWO_ADICITY = 32;
};

using PallasBase = MontField<PallasBaseParams>;
using PallasScalar = MontField<PallasScalarParams>;

// Reference scalar field used by the proof system modules.
using F = PallasScalar;

} // namespace artemis

#endif
