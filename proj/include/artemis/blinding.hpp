#ifndef ARTEMIS_BLINDING_HPP
#define ARTEMIS_BLINDING_HPP

#include <vector>

#include "artemis/errors.hpp"
#include "artemis/rng.hpp"

namespace artemis {

// Append fresh uniform blinding values to a Lagrange-form column: rows
// [0, used_rows) keep their witness values, the next num_blinders rows become
// random, everything after is zero. A column opened at b points outside the
// domain needs at least b+1 blinders to reveal nothing about the witness.
template <typename Fx>
std::vector<Fx> blind_lagrange(const std::vector<Fx>& column, size_t used_rows,
                               size_t num_blinders, Rng& rng) {
    if (used_rows > column.size() || column.size() - used_rows < num_blinders)
        throw NotEnoughBlindingRoom();
    std::vector<Fx> out(column.begin(), column.begin() + used_rows);
    out.resize(column.size(), Fx::zero());
    for (size_t i = 0; i < num_blinders; i++) out[used_rows + i] = Fx::random(rng);
    return out;
}

} // namespace artemis

#endif
