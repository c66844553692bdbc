#ifndef ARTEMIS_HASH_CIRCUIT_HPP
#define ARTEMIS_HASH_CIRCUIT_HPP

#include "artemis/circuit.hpp"
#include "artemis/sponge.hpp"

namespace artemis::sponge {

// In-circuit recomputation of the sponge digest over each committed-weight
// list, with the digests exposed in a dedicated instance column. One block of
// rows per commitment: an init row, then per chunk an absorb row followed by
// one row per round.
struct HashLayout {
    SpongeParams params;
    uint32_t col_state = 0; // 3 advice columns
    uint32_t col_in = 0;    // 2 advice columns, copy-constrained to weights
    uint32_t fx_rc = 0;     // 3 fixed round-constant columns
    uint32_t sel_init = 0, sel_absorb = 0, sel_full = 0, sel_partial = 0;
    uint32_t fx_pad_mask = 0; // 2 fixed columns
    uint32_t fx_pad_val = 0;  // 2 fixed columns
    uint32_t inst_digest = 0; // instance column, row k = digest of commitment k
    size_t rows_used = 0;
    std::vector<uint32_t> digest_rows;

    static size_t rows_for(size_t weights) {
        size_t padded = weights + 1;
        if (padded % SpongeParams::kRate) padded += SpongeParams::kRate - padded % SpongeParams::kRate;
        size_t chunks = padded / SpongeParams::kRate;
        return 1 + chunks * (1 + SpongeParams::kTotalRounds);
    }
};

std::pair<plonkish::CircuitIndex, HashLayout> hash_index_transform(
    const plonkish::CircuitIndex& circuit, const plonkish::CommitIndexSet& icom,
    const SpongeParams& params);

// fill state/input columns from the weight cells and publish digests in the
// instance column
void fill_hash_witness(plonkish::Assignment& assignment, const HashLayout& layout,
                       const plonkish::CommitIndexSet& icom);

} // namespace artemis::sponge

#endif
