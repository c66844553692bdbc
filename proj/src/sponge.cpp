#include "artemis/sponge.hpp"

#include "artemis/sha256.hpp"

namespace artemis::sponge {

SpongeParams SpongeParams::derive(const Bytes& seed) {
    SpongeParams p;
    // Cauchy matrix 1/(x_i + y_j) with x_i = i, y_j = kWidth + j: entries
    // distinct and nonzero, so the matrix is invertible by construction
    for (size_t i = 0; i < kWidth; i++)
        for (size_t j = 0; j < kWidth; j++)
            p.mds[i][j] = F::from_u64(i + kWidth + j).inverse();

    p.round_constants.resize(kTotalRounds);
    for (size_t r = 0; r < kTotalRounds; r++) {
        for (size_t i = 0; i < kWidth; i++) {
            ByteWriter w;
            w.tag("spng");
            w.u64(seed.size());
            w.raw(seed);
            w.u64(r);
            w.u64(i);
            Digest d0 = sha256(w.data());
            w.u64(1);
            Digest d1 = sha256(w.data());
            uint8_t wide[64];
            std::memcpy(wide, d0.data(), 32);
            std::memcpy(wide + 32, d1.data(), 32);
            p.round_constants[r][i] = F::from_wide_bytes(wide);
        }
    }
    return p;
}

namespace {
F sbox(const F& x) {
    F x2 = x.square();
    return x2.square() * x;
}
} // namespace

State round_step(const SpongeParams& params, State state, size_t round) {
    for (size_t i = 0; i < SpongeParams::kWidth; i++)
        state[i] += params.round_constants[round][i];
    if (params.is_full_round(round)) {
        for (auto& s : state) s = sbox(s);
    } else {
        state[0] = sbox(state[0]);
    }
    State mixed{};
    for (size_t i = 0; i < SpongeParams::kWidth; i++) {
        F acc = F::zero();
        for (size_t j = 0; j < SpongeParams::kWidth; j++)
            acc += params.mds[i][j] * state[j];
        mixed[i] = acc;
    }
    return mixed;
}

State permute(const SpongeParams& params, State state) {
    for (size_t r = 0; r < SpongeParams::kTotalRounds; r++)
        state = round_step(params, state, r);
    return state;
}

std::vector<F> pad_input(const std::vector<F>& inputs) {
    std::vector<F> padded = inputs;
    padded.push_back(F::one());
    while (padded.size() % SpongeParams::kRate != 0) padded.push_back(F::zero());
    return padded;
}

F sponge_hash(const SpongeParams& params, const std::vector<F>& inputs) {
    std::vector<F> padded = pad_input(inputs);
    State state{F::zero(), F::zero(), F::zero()};
    for (size_t c = 0; c < padded.size(); c += SpongeParams::kRate) {
        for (size_t i = 0; i < SpongeParams::kRate; i++) state[i] += padded[c + i];
        state = permute(params, state);
    }
    return state[0];
}

} // namespace artemis::sponge
