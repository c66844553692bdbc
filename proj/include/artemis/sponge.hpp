#ifndef ARTEMIS_SPONGE_HPP
#define ARTEMIS_SPONGE_HPP

#include <array>
#include <vector>

#include "artemis/bytes.hpp"
#include "artemis/fields.hpp"

namespace artemis::sponge {

// Reduced algebraic sponge over the scalar field: width 3, rate 2, x^5 S-box,
// 8 full + 14 partial rounds. Round counts are NOT production-sized; this
// hash exists to reproduce the cost shape of in-circuit commitment
// recomputation, not its security margin.
struct SpongeParams {
    static constexpr size_t kWidth = 3;
    static constexpr size_t kRate = 2;
    static constexpr size_t kFullRounds = 8;
    static constexpr size_t kPartialRounds = 14;
    static constexpr size_t kTotalRounds = kFullRounds + kPartialRounds;

    std::array<std::array<F, kWidth>, kWidth> mds{};
    std::vector<std::array<F, kWidth>> round_constants; // kTotalRounds entries

    static SpongeParams derive(const Bytes& seed);

    bool is_full_round(size_t r) const {
        return r < kFullRounds / 2 || r >= kFullRounds / 2 + kPartialRounds;
    }
};

using State = std::array<F, SpongeParams::kWidth>;

// one round: add constants, S-box (all lanes or lane 0), MDS mix
State round_step(const SpongeParams& params, State state, size_t round);

State permute(const SpongeParams& params, State state);

// absorb in rate-sized chunks with 10* padding, squeeze one element
F sponge_hash(const SpongeParams& params, const std::vector<F>& inputs);

// padded input stream (always appends the 1 marker)
std::vector<F> pad_input(const std::vector<F>& inputs);

} // namespace artemis::sponge

#endif
